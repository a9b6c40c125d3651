// Build two order-4 matrices with prescribed spectra, connect them in the
// commuting graph and print the verified path.

#include <iostream>

#include "commgraph/generate.hpp"
#include "commgraph/paths.hpp"

using namespace commgraph;

int main() {
    // A: two distinct conjugate pairs; B: one pair with a size-2 block.
    // This is the configuration that needs the length-5 route.
    Matrix<Rational> A = generate_with_spectrum(
        {JordanBlock::complex_block(Rational(0), Rational(1), 1),
         JordanBlock::complex_block(Rational(0), Rational(2), 1)},
        2024);
    Matrix<Rational> B = generate_with_spectrum(
        {JordanBlock::complex_block(Rational(1), Rational(3), 2)}, 2025);

    PathCertificate<Rational> cert = connect(A, B);
    VerifyReport rep = verify(cert);

    std::cout << "route: " << cert.route << ", length " << cert.length() << ", verified "
              << (rep.ok ? "yes" : "no") << "\n\n";
    for (std::size_t k = 0; k < cert.vertices.size(); ++k) {
        std::cout << "v" << k << " =\n" << cert.vertices[k].to_string() << "\n";
    }
    return rep.ok ? 0 : 1;
}
