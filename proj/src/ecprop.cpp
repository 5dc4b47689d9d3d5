#include "eccad/ecprop.hpp"

#include <algorithm>
#include <tuple>

#include "eccad/algebra.hpp"

namespace eccad {

namespace {

bool is_primitive(const Polynomial& p) {
  return content_prim(p).content.is_constant();
}

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) {
  return a.sign_normalized() == b.sign_normalized();
}

void add_candidate(CandidateTable& t, Candidate c) {
  auto mv = c.poly.mvar();
  if (!mv) return;
  auto& bucket = t.levels[*mv];
  for (const auto& e : bucket)
    if (e.poly == c.poly) return;
  bucket.push_back(std::move(c));
}

void sort_bucket(std::vector<Candidate>& bucket) {
  std::stable_sort(bucket.begin(), bucket.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return poly_less(a.poly, b.poly);
                   });
}

}  // namespace

std::size_t CandidateTable::designatable_count(std::size_t level) const {
  std::size_t n = 0;
  for (const auto& c : levels.at(level)) n += c.primitive ? 1 : 0;
  return n;
}

std::string Designation::to_string(const VariableOrder& order) const {
  std::string out;
  for (std::size_t k = ecs.size(); k-- > 0;) {
    if (!out.empty()) out += ", ";
    out += order.name(k) + ": " + (ecs[k] ? ecs[k]->to_string() : "-");
  }
  return out;
}

CandidateTable propagate(const std::vector<Polynomial>& ecs) {
  CandidateTable t;
  if (ecs.empty()) return t;
  t.order = ecs.front().order();
  t.levels.resize(t.order->size());
  for (const auto& e : ecs) {
    if (e.is_constant()) continue;
    Polynomial p = e.integer_primitive().sign_normalized();
    add_candidate(t, {p, "explicit", is_primitive(p)});
  }
  for (auto& b : t.levels) sort_bucket(b);

  for (std::size_t k = t.levels.size(); k-- > 0;) {
    // copy: new candidates always land strictly below k
    const std::vector<Candidate> here = t.levels[k];
    for (std::size_t i = 0; i < here.size(); ++i) {
      for (std::size_t j = i + 1; j < here.size(); ++j) {
        Polynomial r = resultant(here[i].poly, here[j].poly, k);
        const std::string prov =
            "res(" + here[i].poly.to_string() + ", " + here[j].poly.to_string() + ")";
        if (r.is_zero()) {
          t.warnings.push_back("zero resultant " + prov +
                               ": the two constraints share a factor");
          continue;
        }
        if (r.is_constant()) continue;
        Polynomial s = squarefree_part(r);
        add_candidate(t, {s, prov, is_primitive(s)});
      }
    }
    for (std::size_t below = 0; below < k; ++below) sort_bucket(t.levels[below]);
  }
  return t;
}

std::vector<Designation> enumerate_designations(const CandidateTable& table) {
  const std::size_t n = table.levels.size();
  std::vector<Designation> out{Designation(n)};
  for (std::size_t k = n; k-- > 0;) {
    std::vector<const Candidate*> options;
    for (const auto& c : table.levels[k])
      if (c.primitive) options.push_back(&c);
    if (options.empty()) continue;
    std::vector<Designation> next;
    for (const auto& d : out) {
      for (const Candidate* c : options) {
        Designation e = d;
        e.ecs[k] = c->poly;
        e.provenance[k] = c->provenance;
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

Designation designate_heuristic(const CandidateTable& table) {
  const std::size_t n = table.levels.size();
  Designation d(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Candidate* best = nullptr;
    for (const auto& c : table.levels[k]) {
      if (!c.primitive) continue;
      if (!best) {
        best = &c;
        continue;
      }
      auto key = [](const Polynomial& p) {
        return std::make_tuple(p.sum_of_total_degrees(), p.term_count());
      };
      auto kc = key(c.poly), kb = key(best->poly);
      if (kc < kb || (kc == kb && poly_less(c.poly, best->poly))) best = &c;
    }
    if (best) {
      d.ecs[k] = best->poly;
      d.provenance[k] = best->provenance;
    }
  }
  return d;
}

void validate_designation(const Designation& d, const CandidateTable& table) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!d.ecs[k]) continue;
    const Polynomial& e = *d.ecs[k];
    if (e.mvar() != std::optional<std::size_t>(k))
      throw AlgebraError("designated EC " + e.to_string() +
                         " does not have main variable " +
                         e.order()->name(k));
    if (!is_primitive(e))
      throw AlgebraError("designated EC " + e.to_string() + " is not primitive");
    bool found = false;
    if (k < table.levels.size()) {
      for (const auto& c : table.levels[k]) {
        if (same_up_to_sign(c.poly, e) ||
            same_up_to_sign(c.poly, squarefree_part(e))) {
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw AlgebraError("designated EC " + e.to_string() +
                         " is not an explicit or propagated constraint");
  }
}

}  // namespace eccad
