#include "isohopf/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

#include "isohopf/error.hpp"

namespace isohopf {

std::size_t default_step_budget() {
  if (const char* env = std::getenv("ISOHOPF_STEP_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 1000000;
}

ModPoly canonical(ModPoly p, const TermOrder& order) {
  std::sort(p.begin(), p.end(), [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  ModPoly out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return out;
}

ModPoly to_modpoly(const MultiPoly& p, const TermOrder& order, std::uint32_t pos) {
  ModPoly out;
  out.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) out.push_back({pos, m, c});
  return canonical(std::move(out), order);
}

ModPoly to_modpoly(const std::vector<MultiPoly>& vec, const TermOrder& order) {
  ModPoly out;
  for (std::size_t k = 0; k < vec.size(); ++k)
    for (const auto& [m, c] : vec[k].terms()) out.push_back({static_cast<std::uint32_t>(k), m, c});
  return canonical(std::move(out), order);
}

MultiPoly from_modpoly(const ModPoly& p, const RingPtr& ring) {
  MultiPoly r(ring);
  for (const auto& t : p) r.add_term(t.mono, t.coef);
  return r;
}

std::vector<MultiPoly> from_modpoly_vector(const ModPoly& p, const RingPtr& ring, std::size_t rank) {
  std::vector<MultiPoly> out(rank, MultiPoly(ring));
  for (const auto& t : p) out.at(t.pos).add_term(t.mono, t.coef);
  return out;
}

namespace {

// a - c*m*b, where the leading terms cancel by construction
ModPoly sub_mul(const ModPoly& a, std::size_t a_start, const ModPoly& b, const Monomial& m, const Rational& c,
                const TermOrder& order) {
  ModPoly out;
  out.reserve(a.size() - a_start + b.size());
  std::size_t i = a_start + 1, j = 1;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono * m;
    if (i >= a.size()) {
      out.push_back({b[j].pos, bm, -c * b[j].coef});
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].pos, a[i].mono, b[j].pos, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].pos, bm, -c * b[j].coef});
      ++j;
    } else {
      Rational v = a[i].coef - c * b[j].coef;
      if (sgn(v) != 0) out.push_back({a[i].pos, a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(ModPoly& p) {
  if (p.empty() || p.front().coef == 1) return;
  Rational inv = Rational(1) / p.front().coef;
  for (auto& t : p) t.coef *= inv;
}

unsigned max_degree(const ModPoly& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max(d, t.mono.degree());
  return d;
}

class Engine {
 public:
  Engine(const TermOrder& order, const GroebnerOptions& opts, GroebnerStats* stats)
      : order_(order), opts_(opts), stats_(stats), pairs_(PairLess{this}) {}

  void seed_basis(const std::vector<ModPoly>& gb) {
    for (const auto& g : gb) {
      if (g.empty()) continue;
      ModPoly h = g;
      make_monic(h);
      polys_.push_back(std::move(h));
      sugar_.push_back(max_degree(polys_.back()));
      alive_.push_back(true);
    }
    // the seeded set is taken to be a reduced basis: track rank-1 status
    for (const auto& p : polys_) rank_one_ = rank_one_ && p.front().pos == 0;
  }

  void add_generators(const std::vector<ModPoly>& gens) {
    for (const auto& g : gens)
      for (const auto& t : g) rank_one_ = rank_one_ && t.pos == 0;
    for (const auto& g : gens) {
      if (g.empty()) continue;
      unsigned s = max_degree(g);
      ModPoly h = reduce(g);
      if (h.empty()) continue;
      insert(std::move(h), s);
    }
  }

  void run() {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ModPoly s = spoly(p.i, p.j);
      if (stats_) ++stats_->pairs_reduced;
      tick();
      ModPoly h = reduce(s);
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      insert(std::move(h), p.sugar);
    }
  }

  std::vector<ModPoly> result() {
    std::vector<ModPoly> gb;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (alive_[k]) gb.push_back(polys_[k]);
    std::sort(gb.begin(), gb.end(),
              [&](const ModPoly& a, const ModPoly& b) { return order_.compare(a.front(), b.front()) < 0; });
    // tail reduction
    for (std::size_t k = 0; k < gb.size(); ++k) {
      std::vector<const ModPoly*> others;
      for (std::size_t l = 0; l < gb.size(); ++l)
        if (l != k) others.push_back(&gb[l]);
      gb[k] = full_reduce_tail(gb[k], others);
    }
    return gb;
  }

  ModPoly reduce(const ModPoly& p) {
    std::vector<const ModPoly*> reducers;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (alive_[k]) reducers.push_back(&polys_[k]);
    ModPoly r = full_reduce(p, reducers);
    make_monic(r);
    return r;
  }

  ModPoly full_reduce(const ModPoly& p, const std::vector<const ModPoly*>& reducers) {
    ModPoly done;
    ModPoly work = p;
    std::size_t start = 0;
    while (start < work.size()) {
      const ModTerm& lt = work[start];
      const ModPoly* g = find_reducer(lt, reducers);
      if (!g) {
        done.push_back(lt);
        ++start;
        continue;
      }
      Monomial m = lt.mono / g->front().mono;
      Rational c = lt.coef / g->front().coef;
      work = sub_mul(work, start, *g, m, c, order_);
      start = 0;
      tick();
    }
    return done;
  }

 private:
  struct Pair {
    std::size_t i, j;
    std::uint32_t pos;
    Monomial lcm;
    unsigned sugar;
  };

  struct PairLess {
    const Engine* e;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = e->order_.compare(a.pos, a.lcm, b.pos, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  void tick() {
    ++steps_;
    if (stats_) ++stats_->reduction_steps;
    if (steps_ > opts_.step_budget)
      fail(Errc::ResourceExhausted, "Groebner step budget of " + std::to_string(opts_.step_budget) + " exceeded");
  }

  const ModPoly* find_reducer(const ModTerm& t, const std::vector<const ModPoly*>& reducers) const {
    for (const ModPoly* g : reducers) {
      const ModTerm& lg = g->front();
      if (lg.pos == t.pos && lg.mono.divides(t.mono)) return g;
    }
    return nullptr;
  }

  ModPoly full_reduce_tail(const ModPoly& p, const std::vector<const ModPoly*>& reducers) {
    ModPoly tail(p.begin() + 1, p.end());
    ModPoly r = full_reduce(tail, reducers);
    ModPoly out;
    out.reserve(r.size() + 1);
    out.push_back(p.front());
    for (auto& t : r) out.push_back(std::move(t));
    return out;
  }

  ModPoly spoly(std::size_t i, std::size_t j) const {
    const ModPoly& a = polys_[i];
    const ModPoly& b = polys_[j];
    Monomial l = lcm(a.front().mono, b.front().mono);
    Monomial ma = l / a.front().mono, mb = l / b.front().mono;
    ModPoly sa;
    sa.reserve(a.size());
    for (const auto& t : a) sa.push_back({t.pos, t.mono * ma, t.coef});
    // leading coefficients are 1
    return sub_mul(sa, 0, b, mb, 1, order_);
  }

  void insert(ModPoly h, unsigned sugar) {
    std::size_t t = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    alive_.push_back(true);
    update(t);
  }

  void update(std::size_t t) {
    const ModTerm& lh = polys_[t].front();
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime_lead;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < t; ++g) {
      if (!alive_[g]) continue;
      const ModTerm& lg = polys_[g].front();
      if (lg.pos != lh.pos) continue;
      cands.push_back({g, lcm(lh.mono, lg.mono), rank_one_ && coprime(lh.mono, lg.mono)});
    }
    // chain criterion among new pairs: drop if another new lcm properly divides this one
    for (auto& c : cands) {
      for (const auto& d : cands) {
        if (&c == &d) continue;
        if (d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
          c.keep = false;
          break;
        }
      }
    }
    // equal lcms: keep one; a coprime member kills the whole class
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool any_coprime = cands[a].coprime_lead;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime_lead;
          cands[b].keep = false;
        }
      }
      if (any_coprime) cands[a].keep = false;
    }
    // old pairs made redundant by the new leading term
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (it->pos == lh.pos && lh.mono.divides(it->lcm)) {
        Monomial li = lcm(polys_[it->i].front().mono, lh.mono);
        Monomial lj = lcm(polys_[it->j].front().mono, lh.mono);
        if (!(li == it->lcm) && !(lj == it->lcm)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (const auto& c : cands) {
      if (!c.keep) continue;
      const ModTerm& lg = polys_[c.g].front();
      unsigned dl = c.lcm.degree();
      unsigned s = std::max(sugar_[t] + dl - lh.mono.degree(), sugar_[c.g] + dl - lg.mono.degree());
      pairs_.insert(Pair{c.g, t, lh.pos, c.lcm, s});
    }
    for (std::size_t g = 0; g < t; ++g) {
      if (!alive_[g]) continue;
      const ModTerm& lg = polys_[g].front();
      if (lg.pos == lh.pos && lh.mono.divides(lg.mono)) alive_[g] = false;
    }
  }

  TermOrder order_;
  GroebnerOptions opts_;
  GroebnerStats* stats_;
  std::vector<ModPoly> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> alive_;
  std::set<Pair, PairLess> pairs_;
  std::size_t steps_ = 0;
  bool rank_one_ = true;
};

}  // namespace

std::vector<ModPoly> groebner_basis(const std::vector<ModPoly>& gens, const TermOrder& order,
                                    const GroebnerOptions& opts, GroebnerStats* stats) {
  Engine e(order, opts, stats);
  e.add_generators(gens);
  e.run();
  return e.result();
}

std::vector<ModPoly> groebner_extend(const std::vector<ModPoly>& basis, const std::vector<ModPoly>& extra,
                                     const TermOrder& order, const GroebnerOptions& opts, GroebnerStats* stats) {
  Engine e(order, opts, stats);
  e.seed_basis(basis);
  e.add_generators(extra);
  e.run();
  return e.result();
}

ModPoly normal_form(const ModPoly& p, const std::vector<ModPoly>& basis, const TermOrder& order) {
  GroebnerOptions unlimited;
  unlimited.step_budget = static_cast<std::size_t>(-1);
  Engine e(order, unlimited, nullptr);
  std::vector<const ModPoly*> reducers;
  for (const auto& g : basis)
    if (!g.empty()) reducers.push_back(&g);
  return e.full_reduce(p, reducers);
}

std::optional<std::size_t> count_standard_monomials(const std::vector<ModPoly>& basis, std::size_t nvars,
                                                    std::size_t rank) {
  std::size_t total = 0;
  for (std::size_t pos = 0; pos < rank; ++pos) {
    std::vector<Monomial> leads;
    bool killed = false;
    for (const auto& g : basis) {
      if (g.empty() || g.front().pos != pos) continue;
      if (g.front().mono.is_one()) killed = true;
      leads.push_back(g.front().mono);
    }
    if (killed) continue;
    // each variable needs a pure power among the leading monomials
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
      for (const auto& m : leads) {
        bool pure = m.exp[v] > 0;
        for (std::size_t w = 0; w < nvars && pure; ++w)
          if (w != v && m.exp[w] != 0) pure = false;
        if (pure && (bound[v] == 0 || m.exp[v] < bound[v])) bound[v] = m.exp[v];
      }
      if (bound[v] == 0) return std::nullopt;
    }
    Monomial cur;
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      if (v == nvars) {
        ++total;
        return;
      }
      for (unsigned e = 0; e < bound[v]; ++e) {
        cur.exp[v] = static_cast<std::uint16_t>(e);
        bool divisible = false;
        // prune: if the partial monomial (later vars zero) is already a multiple, so are all extensions
        for (const auto& m : leads)
          if (m.divides(cur)) {
            divisible = true;
            break;
          }
        if (divisible) break;
        walk(v + 1);
      }
      cur.exp[v] = 0;
    };
    walk(0);
  }
  return total;
}

}  // namespace isohopf
