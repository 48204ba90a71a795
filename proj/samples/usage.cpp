// Parse a polynomial, push it through a few operators, and estimate ||P||_2.
#include <cstdio>

#include "diskt/diskt.hpp"

int main() {
  using namespace diskt;
  const ExactPolynomial phi = parse_polynomial("w^2*conj(w) - (1/2 + i)");
  std::printf("phi        = %s\n", to_pretty(phi).c_str());
  for (auto k : {TransformKind::CauchyTransformP, TransformKind::BeurlingH, TransformKind::BergmanB})
    std::printf("%-2s[phi]    = %s\n", std::string(name(k)).c_str(), to_pretty(apply(k, phi)).c_str());
  std::printf("||phi||^2  = %s\n", norm_sq(phi).get_str().c_str());

  for (int d : {5, 10, 20}) std::printf("||P||_2 >= %.12f  (degree %d)\n", estimate_P_norm({d, std::nullopt}).value, d);
  std::printf("alpha      = %.15f\n", solve_alpha());
  std::printf("||P||_{4->inf} = %.12f\n", norm_p_to_inf(4.0));
}
