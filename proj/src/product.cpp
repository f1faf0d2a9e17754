#include "entcert/product.hpp"

#include "entcert/error.hpp"

namespace entcert {

std::vector<ProductFormingMatrix> product_forming(const StateSet& set, const Bipartition& b) {
  validate(b, set.spec);
  std::vector<ExactMatrix> a;
  for (const auto& s : set.states) a.push_back(reshape_bipartite(s, b));
  const std::size_t n = set.size();
  const std::size_t dl = group_dim(set.spec, b.left);
  const std::size_t dr = group_dim(set.spec, b.right);

  std::vector<ProductFormingMatrix> out;
  for (std::size_t k = 0; k < dl; ++k)
    for (std::size_t p = k + 1; p < dl; ++p)
      for (std::size_t l = 0; l < dr; ++l)
        for (std::size_t r = l + 1; r < dr; ++r) {
          ProductFormingMatrix pf{b, k, p, l, r, ExactMatrix(n, n)};
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              pf.entries(i, j) = a[i](k, l) * a[j](p, r) - a[i](k, r) * a[j](p, l);
          out.push_back(std::move(pf));
        }
  return out;
}

MultiPoly quadratic_form(const ExactMatrix& P) {
  const std::size_t n = P.rows();
  MultiPoly f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.add_term(Monomial::var(i) * Monomial::var(j), P(i, j));
  return f;
}

std::vector<MultiPoly> QuadraticSystem::nonzero() const {
  std::vector<MultiPoly> out;
  for (const auto& p : polys)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

std::string QuadraticSystem::text() const {
  std::string s;
  for (const auto& p : polys) s += p.str() + "\n";
  return s;
}

QuadraticSystem quadratic_system(const StateSet& set, const Bipartition& b) {
  QuadraticSystem sys;
  sys.nvars = set.size();
  sys.scope.push_back(bipartition_name(set.spec, b));
  for (const auto& pf : product_forming(set, b)) sys.polys.push_back(quadratic_form(pf.entries).extended(sys.nvars));
  return sys;
}

QuadraticSystem quadratic_system(const StateSet& set) {
  QuadraticSystem sys;
  sys.nvars = set.size();
  for (const auto& b : all_bipartitions(set.spec)) {
    auto part = quadratic_system(set, b);
    sys.scope.push_back(part.scope.front());
    sys.polys.insert(sys.polys.end(), part.polys.begin(), part.polys.end());
  }
  return sys;
}

QuadraticSystem perturb(const QuadraticSystem& sys, std::size_t k) {
  if (k >= sys.nvars) throw Error(ErrorKind::IndexOutOfRange, "pinned index out of range");
  QuadraticSystem out = sys;
  out.pinned = k;
  for (auto& p : out.polys) p = p.substitute(k, GaussianRational(1));
  return out;
}

QuadraticSystem extended_stability_system(const StateSet& core, const StateSet& complement, std::size_t pinned) {
  if (!(core.spec == complement.spec) && !complement.states.empty())
    throw Error(ErrorKind::SpecMismatch, "core and complement use different party specs");
  StateSet all = core;
  all.name = core.name + "+complement";
  for (const auto& s : complement.states) all.states.push_back(s);
  if (exact_rank(coefficient_matrix(all)) != core.spec.total())
    throw Error(ErrorKind::SpanDeficient, "core and complement do not span the space");
  if (pinned >= core.size()) throw Error(ErrorKind::IndexOutOfRange, "pinned index must address a core state");
  return perturb(quadratic_system(all), pinned);
}

}  // namespace entcert
