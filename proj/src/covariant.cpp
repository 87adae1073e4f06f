#include "tca/covariant.hpp"

#include <stdexcept>

namespace tca {

CovariantRep build_covariant(const SystemPtr& sys) {
  const Vec unit = sys->algebra->unit();
  for (int x = 0; x < sys->h_order(); ++x)
    for (int y = 0; y < sys->h_order(); ++y)
      if ((sys->omega_at(x, y) - unit).cwiseAbs().maxCoeff() != 0.0)
        throw std::domain_error(
            "build_covariant: system is not split (omega(" + sys->group.label(x) + "," +
            sys->group.label(y) + ") != 1)");
  CovariantRep rep;
  rep.system = sys;
  rep.U = sys->alpha;  // conjugation permutations, unitary on the weighted l2 space
  return rep;
}

std::vector<CovariantViolation> check_covariant(const CovariantRep& rep, double tol) {
  std::vector<CovariantViolation> out;
  const TwistedSystem& sys = *rep.system;
  const auto& h = sys.group;
  const int n = h.order();
  const int d = sys.dim();
  auto report = [&](const std::string& check, int x, int y, double r) {
    if (r > tol) out.push_back({check, {x, y}, r});
  };

  for (int x = 0; x < n; ++x) {
    report("unitary", x, -1,
           (rep.U[x] * rep.U[x].adjoint() - Mat::Identity(d, d)).cwiseAbs().maxCoeff());
    for (int y = 0; y < n; ++y)
      report("homomorphism", x, y,
             (rep.U[x] * rep.U[y] - rep.U[h.op(x, y)]).cwiseAbs().maxCoeff());
  }

  for (int x = 0; x < n; ++x)
    for (int i = 0; i < d; ++i) {
      Vec f = sys.algebra->basis(i);
      Mat lhs = rep.U[x] * rep.lambda(f) * rep.U[x].adjoint();
      Mat rhs = rep.lambda(sys.alpha_at(x) * f);
      report("covariance", x, i, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return out;
}

std::vector<Mat> covariant_embed(const CovariantRep& rep, const TwistedElement& phi) {
  if (phi.system() != rep.system)
    throw std::invalid_argument("covariant_embed: element of a different system");
  std::vector<Mat> out;
  out.reserve(rep.U.size());
  for (std::size_t x = 0; x < rep.U.size(); ++x)
    out.push_back(rep.lambda(phi.value(static_cast<int>(x))) * rep.U[x]);
  return out;
}

std::vector<Mat> matrix_convolve(const FiniteGroup& h, const std::vector<Mat>& f,
                                 const std::vector<Mat>& g) {
  const int n = h.order();
  std::vector<Mat> out(n, Mat::Zero(f[0].rows(), f[0].cols()));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) out[h.op(y, z)] += f[y] * g[z];
  return out;
}

std::vector<Mat> matrix_involution(const FiniteGroup& h, const std::vector<Mat>& f) {
  const int n = h.order();
  std::vector<Mat> out(n);
  for (int x = 0; x < n; ++x) out[x] = f[h.inverse(x)].adjoint();
  return out;
}

}  // namespace tca
