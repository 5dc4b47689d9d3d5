#include "eccad/cad.hpp"

#include <cstdlib>
#include <sstream>
#include <thread>

#include "eccad/algebra.hpp"
#include "parallel.hpp"

namespace eccad {

namespace {

// (p*alpha + q) / (r*alpha + s) over a fixed real algebraic alpha; the
// denominator vanishing at alpha means +infinity.
struct Mobius {
  const RealAlgebraic* alpha;
  Integer p, q, r, s;
};

// sign(c*alpha + d)
int linear_sign(const RealAlgebraic& alpha, const Integer& c, const Integer& d) {
  if (c == 0) return sgn(d);
  Rational root(-d, c);
  root.canonicalize();
  return sgn(c) * compare(alpha, root);
}

bool is_infinite(const Mobius& m) { return linear_sign(*m.alpha, m.r, m.s) == 0; }

// sign(X - t) for finite X
int sign_minus(const Mobius& m, const Integer& t) {
  return linear_sign(*m.alpha, m.p - t * m.r, m.q - t * m.s) *
         linear_sign(*m.alpha, m.r, m.s);
}

Integer floor_of(const Mobius& m) {
  // exponential then binary search for n <= X < n + 1
  Integer lo = 0, hi = 0, step = 1;
  if (sign_minus(m, Integer(0)) >= 0) {
    while (sign_minus(m, step) >= 0) step *= 2;
    lo = step / 2;
    hi = step;
  } else {
    while (sign_minus(m, Integer(-step)) < 0) step *= 2;
    lo = -step;
    hi = step == 1 ? Integer(0) : Integer(-step / 2);
  }
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (sign_minus(m, mid) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// 1 / (X - n)
Mobius shift_invert(const Mobius& m, const Integer& n) {
  return {m.alpha, m.r, m.s, m.p - n * m.r, m.q - n * m.s};
}

// Least denominator, then least |numerator|, strictly inside (X, Y).
Rational simplest_open(const Mobius& x, const Mobius& y) {
  const Integer fx = floor_of(x);
  const Integer n = fx + 1;
  const bool y_inf = is_infinite(y);
  if (y_inf || sign_minus(y, n) > 0) {
    if (sign_minus(x, Integer(0)) >= 0) return Rational(n);
    if (y_inf || sign_minus(y, Integer(0)) > 0) return Rational(0);
    const Integer fy = floor_of(y);
    return Rational(sign_minus(y, fy) == 0 ? Integer(fy - 1) : fy);
  }
  // fx <= X < Y <= fx + 1
  const Rational inner = simplest_open(shift_invert(y, fx), shift_invert(x, fx));
  return Rational(fx) + 1 / inner;
}

void collect(const Cell& c, std::size_t level, std::vector<const Cell*>& out) {
  if (c.level() == level) {
    out.push_back(&c);
    return;
  }
  for (const auto& ch : c.children) collect(ch, level, out);
}

void collect_mut(Cell& c, std::size_t level, std::vector<Cell*>& out) {
  if (c.level() == level) {
    out.push_back(&c);
    return;
  }
  for (auto& ch : c.children) collect_mut(ch, level, out);
}

std::string index_string(const std::vector<std::uint32_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

}  // namespace

std::string prune_policy_name(PrunePolicy p) {
  switch (p) {
    case PrunePolicy::Alternating: return "alternate";
    case PrunePolicy::EveryLevel: return "every";
    case PrunePolicy::None: return "none";
  }
  return "?";
}

unsigned default_threads() {
  if (const char* env = std::getenv("ECCAD_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::string FailureWitness::to_string(const VariableOrder& order) const {
  std::ostringstream os;
  os << "polynomial " << poly.to_string() << " is nullified over cell "
     << index_string(cell_index) << " while lifting to " << order.name(level)
     << " (sample";
  for (std::size_t i = 0; i < sample.size(); ++i)
    os << (i ? ", " : " ") << order.name(i) << "=" << sample[i].to_string();
  os << ")";
  return os.str();
}

std::vector<const Cell*> CAD::cells_at_level(std::size_t level) const {
  std::vector<const Cell*> out;
  collect(root, level, out);
  return out;
}

std::size_t CAD::true_leaf_count() const {
  std::size_t n = 0;
  for (const Cell* c : leaves()) n += c->truth == Truth::True ? 1 : 0;
  return n;
}

std::vector<bool> pruned_levels(const Designation& d, PrunePolicy policy) {
  std::vector<bool> out(d.size(), false);
  for (std::size_t k = 1; k < d.size(); ++k) {
    const bool ec_below = d.has(k - 1);
    switch (policy) {
      case PrunePolicy::Alternating: out[k] = ec_below && !out[k - 1]; break;
      case PrunePolicy::EveryLevel: out[k] = ec_below; break;
      case PrunePolicy::None: out[k] = false; break;
    }
  }
  return out;
}

Rational below_sample(const RealAlgebraic& a) { return Rational(a.floor_scaled(0) - 1); }

Rational above_sample(const RealAlgebraic& a) { return Rational(a.ceil_scaled(0) + 1); }

Rational sector_sample(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (compare(a, b) >= 0) throw AlgebraError("sector_sample: empty interval");
  return simplest_open({&a, 1, 0, 0, 1}, {&b, 1, 0, 0, 1});
}

Cell extend_trivial(const Cell& cell) {
  Cell child;
  child.index = cell.index;
  child.index.push_back(1);
  child.sample = cell.sample;
  child.sample.emplace_back(Rational(0));
  child.trivial = true;
  return child;
}

std::vector<Cell> gen_stack(const Cell& cell, const std::vector<Polynomial>& polys) {
  const auto roots = substitute_roots(polys, cell.sample);
  std::vector<Cell> out;
  auto push = [&](std::uint32_t idx, RealAlgebraic coord) {
    Cell c;
    c.index = cell.index;
    c.index.push_back(idx);
    c.sample = cell.sample;
    c.sample.push_back(std::move(coord));
    out.push_back(std::move(c));
  };
  if (roots.empty()) {
    push(1, Rational(0));
    return out;
  }
  push(1, below_sample(roots.front().root));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    push(static_cast<std::uint32_t>(2 * i + 2), roots[i].root);
    if (i + 1 < roots.size())
      push(static_cast<std::uint32_t>(2 * i + 3),
           sector_sample(roots[i].root, roots[i + 1].root));
  }
  push(static_cast<std::uint32_t>(2 * roots.size() + 1),
       above_sample(roots.back().root));
  return out;
}

std::vector<Cell> base_phase(const std::vector<Polynomial>& polys) {
  return gen_stack(Cell{}, polys);
}

void label_truth(CAD& cad, const Formula& phi, unsigned threads) {
  if (threads == 0) threads = default_threads();
  std::vector<Cell*> leaves;
  collect_mut(cad.root, cad.order->size(), leaves);
  auto err = detail::parallel_for(leaves.size(), threads, [&](std::size_t i) {
    Cell& c = *leaves[i];
    c.truth = c.trivial ? Truth::False
                        : (evaluate(phi, c.sample) ? Truth::True : Truth::False);
  });
  if (err) std::rethrow_exception(err);
}

CAD build_cad(const Formula& phi, const OrderPtr& order, const Designation& d,
              const BuildOptions& opts) {
  const std::size_t n = order->size();
  const unsigned threads = opts.threads ? opts.threads : default_threads();
  if (d.size() != n)
    throw AlgebraError("designation size does not match the variable order");
  if (opts.check_designation)
    validate_designation(d, propagate(explicit_ecs(phi)));

  CAD cad;
  cad.order = order;
  cad.designation = d;
  cad.layers = projection_phase(order, atom_polynomials(phi), d, opts.projection);
  cad.pruned_levels = pruned_levels(d, opts.prune);

  for (std::size_t k = 0; k < n; ++k) {
    const auto& L = cad.layers.levels[k];
    LiftSet ls;
    ls.id = static_cast<int>(k);
    ls.level = k;
    ls.polys = (opts.full_lift || L.F.empty()) ? L.B : L.F;
    cad.liftsets.push_back(std::move(ls));
  }

  cad.root.lift = cad.liftsets[0].id;
  cad.root.children = base_phase(cad.liftsets[0].polys);
  cad.level_counts.push_back(cad.root.children.size());

  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Cell*> frontier;
    collect_mut(cad.root, k, frontier);
    const LiftSet& ls = cad.liftsets[k];
    const bool prune = cad.pruned_levels[k];
    const std::optional<Polynomial>& below = d.ecs[k - 1];
    std::vector<std::optional<FailureWitness>> failures(frontier.size());

    auto err = detail::parallel_for(frontier.size(), threads, [&](std::size_t i) {
      Cell& c = *frontier[i];
      bool admissible = !c.trivial;
      if (admissible && prune) {
        admissible = opts.full_lift ? sign_at(*below, c.sample) == 0 : c.is_section();
      }
      if (!admissible) {
        c.lift = kTrivialLift;
        c.children = {extend_trivial(c)};
        return;
      }
      c.lift = ls.id;
      try {
        c.children = gen_stack(c, ls.polys);
      } catch (const NullifiedError& e) {
        failures[i] = FailureWitness{k, ls.polys[e.index()], c.index, c.sample};
      }
    });
    if (err) std::rethrow_exception(err);
    for (auto& f : failures) {
      if (f) {
        cad.status = Status::Fail;
        cad.failure = std::move(f);
        return cad;
      }
    }
    std::size_t count = 0;
    for (Cell* c : frontier) count += c->children.size();
    cad.level_counts.push_back(count);
  }
  label_truth(cad, phi, threads);
  return cad;
}

}  // namespace eccad
