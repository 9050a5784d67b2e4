// Finds the minimal-degree negative curve on the blow-up of P(a,b,c) and
// prints its equation.
//
//   minimal_curve 3 4 5 2
#include <cstdlib>
#include <iostream>

#include "negcurve/negcurve.hpp"

int main(int argc, char** argv) {
  if (argc != 5) {
    std::cerr << "usage: minimal_curve A B C MAX_R\n";
    return 2;
  }
  try {
    const negcurve::WeightTriple t(std::atoll(argv[1]), std::atoll(argv[2]), std::atoll(argv[3]));
    const auto res = negcurve::find_negative_curve(t, std::atoll(argv[4]));
    if (!res.certificate) {
      std::cout << "none with r <= " << res.max_r << '\n';
      return 0;
    }
    const auto& cert = *res.certificate;
    std::cout << "degree " << cert.n << ", multiplicity " << cert.r << " at the point:\n ";
    for (std::size_t m = 0; m < cert.basis.size(); ++m) {
      if (cert.coeffs[m] == 0) continue;
      const auto& mono = cert.basis[m];
      std::cout << " + (" << negcurve::to_string(cert.coeffs[m]) << ") x^" << mono.i << " y^" << mono.j << " z^"
                << mono.k;
    }
    std::cout << '\n';
  } catch (const negcurve::ContractViolation& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
