#include "entcert/feature.hpp"

#include "entcert/error.hpp"
#include "entcert/opm.hpp"

namespace entcert {

namespace {

using GR = GaussianRational;

void require_orthogonal(const StateSet& set) {
  if (auto bad = first_overlap(set))
    throw Error(ErrorKind::NotOrthogonal, "states " + set.states[bad->first].label() + " and " +
                                              set.states[bad->second].label() + " are not orthogonal");
}

ExactMatrix feature_from(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t d = a.rows();
  ExactMatrix pi(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      GR acc;
      for (std::size_t r = 0; r < a.cols(); ++r)
        if (!a(p, r).is_zero() && !b(q, r).is_zero()) acc += a(p, r) * b(q, r).conj();
      pi(p, q) = acc;
    }
  return pi;
}

}  // namespace

ExactMatrix reduced_feature(const StateSet& set, std::size_t i, std::size_t j, const Bipartition& group) {
  if (i >= set.size() || j >= set.size()) throw Error(ErrorKind::IndexOutOfRange, "state index out of range");
  return feature_from(reshape_bipartite(set.states[i], group), reshape_bipartite(set.states[j], group));
}

ExactMatrix vectorization_map(const std::vector<ExactMatrix>& mats) {
  if (mats.empty()) return {};
  const std::size_t rows = mats.front().rows();
  const std::size_t cols = mats.front().cols();
  ExactMatrix v(rows * cols, mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) v(c * rows + r, k) = mats[k](r, c);
  return v;
}

std::vector<ExactMatrix> feature_family(const StateSet& set, const Bipartition& group) {
  std::vector<ExactMatrix> reshaped;
  for (const auto& s : set.states) reshaped.push_back(reshape_bipartite(s, group));
  std::vector<ExactMatrix> out;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      ExactMatrix pi = feature_from(reshaped[i], reshaped[j]);
      ExactMatrix dag = adjoint(pi);
      out.push_back(std::move(pi));
      out.push_back(std::move(dag));
    }
  return out;
}

Certificate no_go_first_move(const StateSet& set, const Bipartition& group) {
  require_orthogonal(set);
  validate(group, set.spec);
  const std::size_t d = group_dim(set.spec, group.left);
  const std::size_t bound = d * d - 1;
  auto family = feature_family(set, group);
  const std::size_t rank = family.empty() ? 0 : exact_rank(vectorization_map(family));

  Certificate c;
  c.property = "no-first-move";
  c.scope = group_name(set.spec, group.left);
  c.verdict = rank == bound ? Verdict::Holds : Verdict::Fails;
  c.evidence["group"] = c.scope;
  c.evidence["rank"] = rank;
  c.evidence["bound"] = bound;
  c.evidence["d"] = d;
  return c;
}

std::vector<ExactMatrix> opm_candidates(const StateSet& set, const Bipartition& group) {
  const std::size_t d = group_dim(set.spec, group.left);
  // Row (i, j): tr(E Pi_ij) = sum_{p,q} E[q,p] Pi_ij[p,q] = 0, with vec(E)
  // column-stacked so E[q,p] sits at p*d + q.
  std::vector<std::vector<GR>> rows;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      ExactMatrix pi = reduced_feature(set, i, j, group);
      std::vector<GR> row(d * d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) row[p * d + q] = pi(p, q);
      rows.push_back(std::move(row));
    }
  ExactMatrix cons(rows.size(), d * d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < d * d; ++c) cons(r, c) = rows[r][c];
  ExactMatrix ns = rows.empty() ? ExactMatrix::identity(d * d) : null_space(cons);

  // Hermitian parts, traceless, kept when real-linearly independent.
  std::vector<ExactMatrix> out;
  std::vector<std::vector<GR>> real_vecs;
  auto push = [&](ExactMatrix h) {
    GR tr;
    for (std::size_t k = 0; k < d; ++k) tr += h(k, k);
    tr /= GR(static_cast<long>(d));
    for (std::size_t k = 0; k < d; ++k) h(k, k) -= tr;
    if (is_zero(h)) return;
    std::vector<GR> v;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        v.push_back(GR(h(r, c).re()));
        v.push_back(GR(h(r, c).im()));
      }
    real_vecs.push_back(v);
    ExactMatrix m(real_vecs.size(), v.size());
    for (std::size_t r = 0; r < real_vecs.size(); ++r)
      for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = real_vecs[r][c];
    if (exact_rank(m) < real_vecs.size()) {
      real_vecs.pop_back();
      return;
    }
    out.push_back(std::move(h));
  };
  for (std::size_t k = 0; k < ns.cols(); ++k) {
    ExactMatrix e(d, d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) e(q, p) = ns(p * d + q, k);
    ExactMatrix ed = adjoint(e);
    ExactMatrix herm(d, d), anti(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        herm(r, c) = e(r, c) + ed(r, c);
        anti(r, c) = GR::i() * (e(r, c) - ed(r, c));
      }
    push(herm);
    push(anti);
  }
  return out;
}

Certificate certify_strong_nonlocality(const StateSet& set) {
  require_orthogonal(set);
  if (set.spec.parties() < 3) throw Error(ErrorKind::PreconditionFailed, "strong nonlocality needs at least three parties");
  Certificate cert;
  cert.property = "strong-nonlocality";
  cert.scope = "all (n-1)-party groups";
  Json groups = Json::array();
  bool all_hold = true;
  bool witnessed = false;
  for (const auto& g : joint_groups(set.spec)) {
    Certificate c = no_go_first_move(set, g);
    Json entry = c.evidence;
    entry["verdict"] = std::string(to_string(c.verdict));
    if (!c.holds()) {
      all_hold = false;
      auto cands = opm_candidates(set, g);
      // Candidates in order, then pairwise sums and differences.
      std::vector<ExactMatrix> trials = cands;
      for (std::size_t a = 0; a < cands.size(); ++a)
        for (std::size_t b = a + 1; b < cands.size(); ++b) {
          ExactMatrix s(cands[a].rows(), cands[a].cols()), t = s;
          for (std::size_t r = 0; r < s.rows(); ++r)
            for (std::size_t q = 0; q < s.cols(); ++q) {
              s(r, q) = cands[a](r, q) + cands[b](r, q);
              t(r, q) = cands[a](r, q) - cands[b](r, q);
            }
          trials.push_back(s);
          trials.push_back(t);
        }
      entry["candidates"] = cands.size();
      for (const auto& E : trials) {
        try {
          OpmWitness w = build_opm_witness(set, g, E);
          entry["witness"] = w.to_json(set);
          witnessed = true;
          break;
        } catch (const Error&) {
        }
      }
    }
    groups.push_back(entry);
  }
  cert.evidence["groups"] = groups;
  if (all_hold) cert.verdict = Verdict::Holds;
  else cert.verdict = witnessed ? Verdict::Fails : Verdict::Inconclusive;
  return cert;
}

}  // namespace entcert
