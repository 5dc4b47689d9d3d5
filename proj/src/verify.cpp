#include "eccad/verify.hpp"

#include <random>

#include "parallel.hpp"

namespace eccad {

namespace {

std::string index_string(const std::vector<std::uint32_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

const LiftSet* find_liftset(const CAD& cad, int id) {
  for (const auto& ls : cad.liftsets)
    if (ls.id == id) return &ls;
  return nullptr;
}

// Child position of coordinate x over the roots of the liftset at prefix.
std::size_t child_position(const CAD& cad, const Cell& c, const SamplePoint& prefix,
                           const RealAlgebraic& x) {
  const LiftSet* ls = find_liftset(cad, c.lift);
  if (!ls) throw AlgebraError("locate: unknown liftset id");
  std::vector<RealAlgebraic> roots;
  for (const auto& p : ls->polys) {
    RootsResult r = roots_at(p, prefix);
    if (r.nullified) continue;
    for (auto& root : r.roots) roots.push_back(root);
  }
  std::size_t below = 0;
  bool on = false;
  std::vector<RealAlgebraic> distinct;
  for (auto& r : roots) {
    bool dup = false;
    for (auto& d : distinct)
      if (compare(d, r) == 0) {
        dup = true;
        break;
      }
    if (!dup) distinct.push_back(r);
  }
  for (auto& r : distinct) {
    const int s = compare(r, x);
    if (s < 0) ++below;
    if (s == 0) on = true;
  }
  return on ? 2 * below + 1 : 2 * below;  // zero based
}

void audit_cell(const CAD& cad, const Cell& c, AuditReport& rep) {
  ++rep.cells;
  const std::string where = "cell " + index_string(c.index);
  const std::size_t n = cad.order->size();
  if (c.sample.size() != c.level())
    rep.violations.push_back(where + ": sample length differs from level");
  if (c.level() == n) {
    if (!c.children.empty()) rep.violations.push_back(where + ": leaf has children");
    if (cad.status == Status::Complete && c.truth == Truth::Unset)
      rep.violations.push_back(where + ": leaf without truth value");
    if (c.trivial && c.truth == Truth::True)
      rep.violations.push_back(where + ": trivially extended leaf labelled true");
    return;
  }
  if (c.children.empty()) {
    if (cad.status == Status::Complete)
      rep.violations.push_back(where + ": inner cell without children");
    return;
  }
  for (std::size_t i = 0; i < c.children.size(); ++i) {
    const Cell& ch = c.children[i];
    if (ch.index.size() != c.index.size() + 1 ||
        !std::equal(c.index.begin(), c.index.end(), ch.index.begin()) ||
        ch.index.back() != i + 1)
      rep.violations.push_back("cell " + index_string(ch.index) +
                               ": index not consecutive under its parent");
    if (i > 0 && !(c.children[i - 1].sample.back() < ch.sample.back()))
      rep.violations.push_back("cell " + index_string(ch.index) +
                               ": sample not above its left neighbour");
    for (std::size_t j = 0; j < c.level() && j < ch.sample.size(); ++j)
      if (compare(ch.sample[j], c.sample[j]) != 0)
        rep.violations.push_back("cell " + index_string(ch.index) +
                                 ": sample does not extend the parent");
  }
  if (c.children.size() % 2 == 0)
    rep.violations.push_back(where + ": even number of children");
  if (c.lift == kTrivialLift) {
    if (c.children.size() != 1 || !c.children[0].trivial)
      rep.violations.push_back(where + ": malformed trivial extension");
  } else if (c.trivial) {
    rep.violations.push_back(where + ": trivial cell lifted nontrivially");
  } else if (const LiftSet* ls = find_liftset(cad, c.lift)) {
    for (const Cell& ch : c.children) {
      bool any_zero = false, all_nonzero = true;
      for (const auto& p : ls->polys) {
        const bool zero = sign_at(p, ch.sample) == 0;
        any_zero = any_zero || zero;
        all_nonzero = all_nonzero && !zero;
      }
      if (ch.is_section() && !any_zero)
        rep.violations.push_back("cell " + index_string(ch.index) +
                                 ": section sample is not a root of the liftset");
      if (!ch.is_section() && !all_nonzero)
        rep.violations.push_back("cell " + index_string(ch.index) +
                                 ": sector sample is a root of the liftset");
    }
  } else {
    rep.violations.push_back(where + ": unknown liftset id");
  }
  for (const Cell& ch : c.children) audit_cell(cad, ch, rep);
}

}  // namespace

const Cell& locate_at_level(const CAD& cad, const SamplePoint& q, std::size_t level) {
  if (q.size() < level) throw AlgebraError("locate: point has too few coordinates");
  const Cell* c = &cad.root;
  SamplePoint prefix;
  while (c->level() < level) {
    if (c->children.empty()) throw AlgebraError("locate: incomplete CAD");
    const RealAlgebraic& x = q[c->level()];
    std::size_t pos = 0;
    if (c->lift != kTrivialLift) pos = child_position(cad, *c, prefix, x);
    if (pos >= c->children.size())
      throw AlgebraError("locate: point falls outside the stack of cell " +
                         index_string(c->index));
    prefix.push_back(x);
    c = &c->children[pos];
  }
  return *c;
}

const Cell& locate_at_level(const CAD& cad, const std::vector<Rational>& q,
                            std::size_t level) {
  return locate_at_level(cad, SamplePoint(q.begin(), q.end()), level);
}

const Cell& locate(const CAD& cad, const SamplePoint& q) {
  return locate_at_level(cad, q, cad.order->size());
}

const Cell& locate(const CAD& cad, const std::vector<Rational>& q) {
  return locate_at_level(cad, q, cad.order->size());
}

std::vector<std::vector<Rational>> random_points(std::size_t dim, std::size_t count,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-(1L << 16), 1L << 16);
  std::uniform_int_distribution<long> den(1, 1L << 8);
  std::vector<std::vector<Rational>> out(count);
  for (auto& p : out) {
    for (std::size_t i = 0; i < dim; ++i) {
      const long a = num(rng), b = den(rng);
      Rational r(a, b);
      r.canonicalize();
      p.push_back(r);
    }
  }
  return out;
}

InvarianceReport check_truth_invariance(const CAD& cad, const Formula& phi,
                                        std::size_t count, std::uint64_t seed,
                                        unsigned threads) {
  if (cad.status != Status::Complete)
    throw AlgebraError("check_truth_invariance: CAD is not complete");
  if (threads == 0) threads = default_threads();
  const auto points = random_points(cad.order->size(), count, seed);
  std::vector<std::optional<Mismatch>> found(points.size());
  auto err = detail::parallel_for(points.size(), threads, [&](std::size_t i) {
    const Cell& leaf = locate(cad, points[i]);
    SamplePoint pt(points[i].begin(), points[i].end());
    const bool value = evaluate(phi, pt);
    const bool cell_value = leaf.truth == Truth::True;
    if (value != cell_value || leaf.truth == Truth::Unset)
      found[i] = Mismatch{points[i], leaf.index, value, leaf.truth};
  });
  if (err) std::rethrow_exception(err);
  InvarianceReport rep;
  rep.checked = points.size();
  for (auto& m : found)
    if (m) rep.mismatches.push_back(std::move(*m));
  return rep;
}

AuditReport audit_structure(const CAD& cad) {
  AuditReport rep;
  audit_cell(cad, cad.root, rep);
  --rep.cells;  // the root is R^0
  return rep;
}

}  // namespace eccad
