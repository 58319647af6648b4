// Prints c(i, j, k) for k = 1/2 next to the r-Stirling numbers they map to.

#include <iostream>

#include "msn/numbers.hpp"
#include "msn/stirling.hpp"

int main() {
  const msn::Rational k(1, 2);
  const msn::MsnTable table = msn::msn1_table(6, k);
  std::cout << "c(i, j, 1/2):\n";
  for (long i = 0; i <= table.n_max(); ++i) {
    for (const auto& v : table.row(i)) std::cout << v << '\t';
    std::cout << '\n';
  }

  const long r = 2;
  const msn::RStirlingTable rs = msn::RStirlingTable::build(r, 6);
  std::cout << "\n[i, j]_2 from (-1)^(i-j) c(i-2, j-2, 2):\n";
  const msn::MsnTable shifted = msn::msn1_table(6, r);
  for (long i = r; i <= 6; ++i) {
    for (long j = r; j <= i; ++j) {
      msn::Rational via_msn = msn::Rational(msn::parity_sign(i - j)) * shifted.at(i - r, j - r);
      std::cout << rs.at(i, j) << (via_msn == msn::Rational(rs.at(i, j)) ? "" : "!") << '\t';
    }
    std::cout << '\n';
  }
}
