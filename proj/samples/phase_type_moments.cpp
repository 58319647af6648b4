// Ordinary, factorial and central moments of a two-phase distribution,
// with the factorial moments recovered from the ordinary ones.

#include <iostream>

#include "msn/moments.hpp"
#include "msn/phase_type.hpp"

namespace {

void print(const char* label, const msn::MomentVector& v) {
  std::cout << label << ":";
  for (const auto& x : v.values()) std::cout << ' ' << x;
  std::cout << '\n';
}

}  // namespace

int main() {
  using msn::Rational;
  msn::PhaseType x({Rational(1, 2), Rational(1, 2)},
                   msn::RationalMatrix{{Rational(1, 4), Rational(1, 4)},
                                       {Rational(0), Rational(1, 2)}});
  const auto ordinary = msn::ph_moments(x, msn::MomentKind::ordinary, 6);
  print("ordinary  ", ordinary);
  print("factorial ", msn::ph_moments(x, msn::MomentKind::factorial, 6));
  print("  via c   ", msn::factorial_from_ordinary(ordinary));
  print("central   ", msn::central_from_ordinary(ordinary));
}
