#include "species/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

#include "species/arrows.hpp"
#include "species/errors.hpp"
#include "species/products.hpp"
#include "species/tits.hpp"

namespace species {

RunReport::RunReport(std::string command, Json parameters)
    : command_(std::move(command)), parameters_(std::move(parameters)) {}

void RunReport::check(const std::string& name, bool ok) {
  Json& slot = checks_[name];
  if (slot.is_null()) slot = {{"checked", 0}, {"failures", 0}};
  slot["checked"] = slot["checked"].get<std::uint64_t>() + 1;
  ++checked_;
  if (!ok) {
    slot["failures"] = slot["failures"].get<std::uint64_t>() + 1;
    ++failures_;
  }
}

void RunReport::absorb(const RunReport& other) {
  for (const auto& [name, slot] : other.checks_.items()) {
    Json& mine = checks_[name];
    if (mine.is_null()) mine = {{"checked", 0}, {"failures", 0}};
    mine["checked"] = mine["checked"].get<std::uint64_t>() + slot["checked"].get<std::uint64_t>();
    mine["failures"] = mine["failures"].get<std::uint64_t>() + slot["failures"].get<std::uint64_t>();
  }
  checked_ += other.checked_;
  failures_ += other.failures_;
}

std::uint64_t RunReport::failures_of(const std::string& name) const {
  auto it = checks_.find(name);
  return it == checks_.end() ? 0 : it->at("failures").get<std::uint64_t>();
}

Json RunReport::to_json() const {
  Json out = payload_;
  out["command"] = command_;
  out["parameters"] = parameters_;
  out["status"] = passed() ? "pass" : "fail";
  out["counters"] = {{"checked", checked_}, {"failures", failures_}};
  out["checks"] = checks_;
  return out;
}

unsigned thread_count() {
  if (const char* env = std::getenv("SPECIES_HOPF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t known_cell_count(int n) {
  static const std::uint64_t counts[] = {1, 1, 2, 6, 32, 370, 11292};
  if (n < 0 || n > 6) throw DomainError("known_cell_count: no tabulated value for n = " + std::to_string(n));
  return counts[n];
}

namespace {

using Triple = LinComb<std::tuple<Composition, Composition, Composition>>;

LabelSet canonical(int n) { return n == 0 ? LabelSet() : LabelSet::range(n); }

std::vector<SigmaElem> basis_over(const LabelSet& ground, Basis b) {
  std::vector<SigmaElem> out;
  for (const auto& f : compositions_of(ground)) out.push_back(b == Basis::H ? SigmaElem::H(f) : SigmaElem::Q(f));
  return out;
}

// Ordered triples (A, B, C) with A u B u C = I.
std::vector<std::tuple<LabelSet, LabelSet, LabelSet>> ordered_triples(const LabelSet& ground) {
  std::vector<std::tuple<LabelSet, LabelSet, LabelSet>> out;
  for (const auto& [a, rest] : ordered_splits(ground)) {
    for (const auto& [b, c] : ordered_splits(rest)) out.emplace_back(a, b, c);
  }
  return out;
}

void add_triple(Triple& out, const SigmaElem& x, const SigmaElem& y, const SigmaElem& z) {
  for (const auto& [f, cf] : x) {
    for (const auto& [g, cg] : y) {
      for (const auto& [h, ch] : z) out.add_term({f, g, h}, cf * cg * ch);
    }
  }
}

SigmaElem counit_left(const SigmaElem& x) {
  SigmaElem out(x.ground(), x.basis());
  for (const auto& [p, q] : delta(LabelSet(), x.ground(), x)) out += counit(p) * q;
  return out;
}

SigmaElem counit_right(const SigmaElem& x) {
  SigmaElem out(x.ground(), x.basis());
  for (const auto& [p, q] : delta(x.ground(), LabelSet(), x)) out += counit(q) * p;
  return out;
}

SigmaElem unit_in(Basis b) { return b == Basis::H ? SigmaElem::unit() : SigmaElem::Q(Composition()); }

std::vector<Tree> all_trees(const LabelSet& ground) {
  std::vector<Tree> out{Tree::leaf(ground)};
  for (const auto& [a, b] : ordered_splits(ground)) {
    if (a.empty() || b.empty()) continue;
    for (const auto& ta : all_trees(a)) {
      for (const auto& tb : all_trees(b)) out.push_back(Tree::node(ta, tb));
    }
  }
  return out;
}

// Labels 1..n decorated by x1..xn at the given times.
TimedDecoration at_times(const std::vector<long>& times) {
  TimedDecoration d;
  for (std::size_t k = 0; k < times.size(); ++k)
    d[static_cast<Label>(k + 1)] = {"x" + std::to_string(k + 1), Rational(times[k])};
  return d;
}

std::vector<std::vector<long>> permutations_of(int n, long offset = 0) {
  std::vector<long> t(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) t[k] = offset + k;
  std::vector<std::vector<long>> out;
  do out.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));
  return out;
}

SigmaSeries random_series(int max_n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<SigmaElem> terms;
  for (int n = 0; n <= max_n; ++n) {
    SigmaElem x(canonical(n));
    const auto comps = compositions_of(canonical(n));
    for (int k = 0; k < 3; ++k) x.add_term(comps[rng() % comps.size()], coeff(rng));
    terms.push_back(symmetrize(x));
  }
  return SigmaSeries(std::move(terms));
}

// Per-item check lists, recorded in item order after a parallel sweep.
using CheckList = std::vector<std::pair<const char*, bool>>;

void record(RunReport& r, const std::vector<CheckList>& items) {
  for (const auto& list : items) {
    for (const auto& [name, ok] : list) r.check(name, ok);
  }
}

}  // namespace

RunReport hopf_axioms_report(int n) {
  RunReport r("hopf axioms", {{"n", n}});
  for (Basis b : {Basis::H, Basis::Q}) {
    const SigmaElem one = unit_in(b);
    for (int m = 0; m <= n; ++m) {
      const LabelSet ground = canonical(m);
      const auto basis = basis_over(ground, b);
      for (const auto& x : basis) {
        r.check("unit", mu(one, x) == x && mu(x, one) == x);
        r.check("counit", counit_left(x) == x && counit_right(x) == x);
        SigmaElem left(ground, b), right(ground, b);
        for (const auto& [s, t] : ordered_splits(ground)) {
          for (const auto& [p, q] : delta(s, t, x)) {
            left += mu(p, antipode(q));
            right += mu(antipode(p), q);
          }
        }
        const bool ok = m == 0 ? left == counit(x) * one && right == counit(x) * one : left.is_zero() && right.is_zero();
        r.check("antipode convolution", ok);
      }
      for (const auto& [s, t, u] : ordered_triples(ground)) {
        const auto bs = basis_over(s, b), bt = basis_over(t, b), bu = basis_over(u, b);
        for (const auto& x : bs) {
          for (const auto& y : bt) {
            const SigmaElem xy = mu(x, y);
            for (const auto& z : bu) r.check("associativity", mu(xy, z) == mu(x, mu(y, z)));
          }
        }
        for (const auto& x : basis) {
          Triple lhs, rhs;
          for (const auto& [p, q] : delta(s | t, u, x)) {
            for (const auto& [p1, p2] : delta(s, t, p)) add_triple(lhs, p1, p2, q);
          }
          for (const auto& [p, q] : delta(s, t | u, x)) {
            for (const auto& [q1, q2] : delta(t, u, q)) add_triple(rhs, p, q1, q2);
          }
          r.check("coassociativity", lhs == rhs);
        }
      }
      for (const auto& [a, bset] : ordered_splits(ground)) {
        const auto ba = basis_over(a, b), bb = basis_over(bset, b);
        for (const auto& x : ba) {
          for (const auto& y : bb) {
            const SigmaElem xy = mu(x, y);
            for (const auto& [s, t] : ordered_splits(ground)) {
              Tensor rhs;
              for (const auto& [x1, x2] : delta(a & s, a & t, x)) {
                for (const auto& [y1, y2] : delta(bset & s, bset & t, y)) {
                  rhs += flatten({{mu(x1, y1), mu(x2, y2)}});
                }
              }
              r.check("bimonoid compatibility", flatten(delta(s, t, xy)) == rhs);
            }
          }
        }
      }
    }
  }
  return r;
}

RunReport antipode_report(int n) {
  RunReport r("antipode", {{"n", n}});
  for (int m = 0; m <= n; ++m) {
    for (const auto& x : basis_over(canonical(m), Basis::H)) {
      r.check("closed = Takeuchi (H)", antipode(x) == takeuchi_antipode(x));
    }
    for (const auto& x : basis_over(canonical(m), Basis::Q)) {
      r.check("closed = Takeuchi (Q)", to_h(antipode(x)) == to_h(takeuchi_antipode(x)));
    }
  }
  return r;
}

RunReport basis_change_report(int n) {
  RunReport r("basis change", {{"n", n}});
  for (int m = 0; m <= n; ++m) {
    for (const auto& x : basis_over(canonical(m), Basis::H)) r.check("to_h after to_q", to_h(to_q(x)) == x);
    for (const auto& x : basis_over(canonical(m), Basis::Q)) r.check("to_q after to_h", to_q(to_h(x)) == x);
    if (m >= 1) r.check("Q_(I) primitive", is_primitive(SigmaElem::Q(Composition{canonical(m)})));
  }
  return r;
}

RunReport dimension_report(int n) {
  static const unsigned long long expected[] = {1, 2, 6, 26, 150, 1082};
  RunReport r("primitive dimensions", {{"n", n}});
  Json dims = Json::array();
  for (int m = 1; m <= n; ++m) {
    const std::size_t dim = primitive_part_basis(m, static_cast<std::size_t>(std::max(n, 5))).size();
    const unsigned long long formula = zie_dimension(m);
    r.check("kernel = partition formula", dim == formula);
    if (m <= 6) r.check("known dimension", dim == expected[m - 1]);
    dims.push_back({{"n", m}, {"kernel", dim}, {"formula", formula}});
  }
  r.payload()["dimensions"] = dims;
  return r;
}

RunReport hopf_check(int n) {
  RunReport r("hopf check", {{"n", n}});
  r.absorb(hopf_axioms_report(n));
  r.absorb(antipode_report(n));
  r.absorb(basis_change_report(n));
  r.absorb(dimension_report(n));
  return r;
}

RunReport cells_count_report(int n) {
  RunReport r("cells count", {{"n", n}});
  const auto cells = enumerate_cells(canonical(n), static_cast<std::size_t>(std::max(n, 6)));
  r.payload()["n"] = n;
  r.payload()["count"] = cells.size();
  if (n <= 6) r.check("matches A034997", cells.size() == known_cell_count(n));
  return r;
}

RunReport cells_enumerate_report(int n, bool witnesses) {
  RunReport r("cells enumerate", {{"n", n}, {"witnesses", witnesses}});
  const auto cells = enumerate_cells(canonical(n), static_cast<std::size_t>(std::max(n, 6)));
  Json list = Json::array();
  for (const auto& c : cells) {
    Json entry = to_json(c);
    if (witnesses) {
      const auto w = is_cell(c);
      r.check("witness found", w.has_value());
      if (w) entry["witness"] = to_json(*w);
    }
    list.push_back(std::move(entry));
  }
  r.payload()["n"] = n;
  r.payload()["count"] = cells.size();
  r.payload()["cells"] = std::move(list);
  if (n <= 6) r.check("matches A034997", cells.size() == known_cell_count(n));
  return r;
}

RunReport dynkin_report(int n) {
  RunReport r("dynkin rank", {{"n", n}});
  for (int m = 1; m <= n; ++m) {
    const LabelSet ground = canonical(m);
    const auto cells = enumerate_cells(ground);
    std::vector<CheckList> items(cells.size());
    parallel_for(cells.size(), [&](std::size_t k) {
      const Cell& c = cells[k];
      const SigmaElem d = dynkin(c);
      items[k].emplace_back("primitive", is_primitive(d));
      items[k].emplace_back("Tits factorization", d == dynkin_tits_factorization(c));
      bool annihilated = true;
      for (const auto& s : c.positive_sides()) {
        annihilated = annihilated && tits(d, SigmaElem::H(Composition{ground - s, s})).is_zero();
      }
      items[k].emplace_back("Tits annihilation", annihilated);
    });
    record(r, items);
  }
  if (n >= 1) {
    const DynkinRank rank = dynkin_rank(canonical(n), static_cast<std::size_t>(std::max(n, 5)));
    r.check("rank = dim Zie", rank.rank == rank.zie_dim);
    r.payload()["cells"] = rank.cells;
    r.payload()["rank"] = rank.rank;
    r.payload()["zieDim"] = rank.zie_dim;
  }
  return r;
}

RunReport steinmann_report(int n) {
  RunReport r("steinmann verify", {{"n", n}});
  const auto quads = steinmann_quadruples(canonical(n));
  for (const auto& q : quads) r.check("relation holds", steinmann_relation_holds(q));
  const std::size_t rank = steinmann_relation_rank(quads);
  if (n == 4) r.check("relation span = 6", rank == 6);
  if (!quads.empty()) {
    // Flip a channel of s2 that the quadruple does not involve.
    SteinmannQuadruple bad = quads.front();
    const LabelSet ground = canonical(n);
    for (const auto& s : bad.s2.positive_sides()) {
      if (s == bad.first || s == bad.second || s == ground - bad.first || s == ground - bad.second) continue;
      bad.s2 = bad.s2.flipped(s);
      break;
    }
    r.check("negative control detected", !steinmann_relation_holds(bad));
  }
  r.payload()["quadruples"] = quads.size();
  r.payload()["rank"] = rank;
  return r;
}

RunReport ruelle_report(int n) {
  RunReport r("ruelle verify", {{"n", n}});
  std::size_t configurations = 0;
  for (int m = 2; m <= n; ++m) {
    const LabelSet ground = canonical(m);
    const auto cells = enumerate_cells(ground);
    for (const auto& [s, t] : ordered_splits(ground)) {
      if (s.empty() || t.empty()) continue;
      const auto cs = enumerate_cells(s), ct = enumerate_cells(t);
      for (const auto& c1 : cs) {
        for (const auto& c2 : ct) {
          for (const auto& b : cells) {
            if (!ruelle_admissible(c1, c2, b)) continue;
            r.check("Ruelle identity", ruelle_check(c1, c2, b));
            ++configurations;
          }
        }
      }
    }
  }
  if (n >= 2) r.check("configurations found", configurations > 0);
  r.payload()["configurations"] = configurations;
  return r;
}

RunReport glz_report(int n) {
  RunReport r("glz verify", {{"n", n}});
  for (int m = 2; m <= n; ++m) {
    const LabelSet ground = canonical(m);
    for (Label a : ground) {
      for (Label b : ground) {
        if (a != b) r.check("GLZ relation", glz_check(ground, a, b));
      }
    }
  }
  return r;
}

RunReport jacobi_report(int n) {
  RunReport r("tree identities", {{"n", n}});
  for (int m = 1; m <= n; ++m) {
    for (const auto& t : all_trees(canonical(m))) r.check("tree image primitive", is_primitive(tree_to_primitive(t)));
  }
  for (int m = 2; m <= n; ++m) {
    for (const auto& [a, b] : ordered_splits(canonical(m))) {
      if (a.empty() || b.empty()) continue;
      for (const auto& ta : all_trees(a)) {
        for (const auto& tb : all_trees(b)) {
          const SigmaElem x = tree_to_primitive(ta), y = tree_to_primitive(tb);
          r.check("antisymmetry", commutator(x, y) == -commutator(y, x));
        }
      }
    }
  }
  for (int m = 3; m <= n; ++m) {
    for (const auto& [a, b, c] : ordered_triples(canonical(m))) {
      if (a.empty() || b.empty() || c.empty()) continue;
      for (const auto& ta : all_trees(a)) {
        for (const auto& tb : all_trees(b)) {
          for (const auto& tc : all_trees(c)) {
            const SigmaElem x = tree_to_primitive(ta), y = tree_to_primitive(tb), z = tree_to_primitive(tc);
            const SigmaElem sum =
                commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
            r.check("Jacobi", sum.is_zero());
          }
        }
      }
    }
  }
  return r;
}

RunReport arrows_report(int n) {
  RunReport r("arrows verify", {{"n", n}});
  const LabelSet star{-1};
  const SigmaElem h_star = SigmaElem::H(Composition{star});
  const std::pair<Scalar, Scalar> arrows[] = {{1, 0}, {0, 1}, {2, -3}};
  for (int m = 0; m <= n; ++m) {
    const LabelSet ground = canonical(m);
    for (const auto& [ab_a, ab_b] : arrows) {
      for (const auto& [s, t] : ordered_splits(ground)) {
        for (const auto& x : basis_over(s, Basis::H)) {
          for (const auto& y : basis_over(t, Basis::H)) {
            r.check("derivation", u_ab(ab_a, ab_b, -1, mu(x, y)) ==
                                      mu(u_ab(ab_a, ab_b, -1, x), y) + mu(x, u_ab(ab_a, ab_b, -1, y)));
          }
        }
      }
      for (const auto& f : compositions_of(ground)) {
        const SigmaElem ux = u_ab(ab_a, ab_b, -1, SigmaElem::H(f));
        for (const auto& [s, t] : ordered_splits(ground)) {
          const auto lhs = flatten(delta(s | star, t, ux));
          const auto rhs = flatten({{u_ab(ab_a, ab_b, -1, SigmaElem::H(restrict(f, s))), SigmaElem::H(restrict(f, t))}});
          r.check("coderivation", lhs == rhs);
        }
      }
    }
    for (const auto& x : basis_over(ground, Basis::H)) {
      r.check("order independence", arrow_down({-2, -1}, x) == u_ab(1, 0, -1, u_ab(1, 0, -2, x)) &&
                                        arrow_up({-2, -1}, x) == u_ab(0, 1, -1, u_ab(0, 1, -2, x)));
      r.check("up - down = adjoint", arrow_up(star, x) - arrow_down(star, x) == commutator(h_star, x));
    }
    if (m >= 1) {
      for (const auto& p : primitive_part_basis(m)) {
        r.check("primitivity preserved", is_primitive(arrow_down(star, p)) && is_primitive(arrow_up(star, p)));
      }
      for (const auto& c : enumerate_cells(ground)) {
        for (const LabelSet& y : {LabelSet{-1}, LabelSet{-2, -1}}) {
          r.check("arrows on cells", arrow_down(y, dynkin(c)) == dynkin(arrow_cell_down(y, c)) &&
                                         arrow_up(y, dynkin(c)) == dynkin(arrow_cell_up(y, c)));
        }
      }
    }
    for (const auto& f : compositions_of(ground)) {
      for (const LabelSet& y : {LabelSet{}, LabelSet{-1}, LabelSet{-2, -1}}) {
        // Sum over assignments of each label of Y to a lump of F.
        SigmaElem down(y | ground), up(y | ground);
        const std::size_t k = f.length();
        if (k == 0) {
          if (y.empty()) {
            down += SigmaElem::unit();
            up += SigmaElem::unit();
          }
        } else {
          std::vector<std::size_t> pick(y.size(), 0);
          while (true) {
            std::vector<LabelSet> parts(k);
            for (std::size_t i = 0; i < y.size(); ++i) parts[pick[i]] = parts[pick[i]] | LabelSet{y[i]};
            std::vector<SigmaElem> rs, as;
            for (std::size_t i = 0; i < k; ++i) {
              rs.push_back(retarded_element(parts[i], f[i]));
              as.push_back(advanced_element(parts[i], f[i]));
            }
            down += mu(rs);
            up += mu(as);
            std::size_t i = 0;
            while (i < y.size() && ++pick[i] == k) pick[i++] = 0;
            if (i == y.size()) break;
          }
        }
        r.check("factorized R/A expansion",
                arrow_down(y, SigmaElem::H(f)) == down && arrow_up(y, SigmaElem::H(f)) == up);
      }
    }
  }
  return r;
}

RunReport series_report(unsigned order) {
  RunReport r("series identities", {{"order", order}});
  const int max_n = static_cast<int>(order);
  std::mt19937 rng(2024);
  const SigmaSeries unit = SigmaSeries::unit(max_n);
  const SigmaSeries g = universal_series(1, max_n);
  for (int trial = 0; trial < 3; ++trial) {
    const SigmaSeries a = random_series(max_n, rng), b = random_series(max_n, rng), c = random_series(max_n, rng);
    r.check("convolution unit", convolve(unit, a) == a && convolve(a, unit) == a);
    r.check("convolution associativity", convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  }
  for (const Scalar& c : {Scalar(1), Scalar::fraction(2, 3), Scalar::imag_unit()}) {
    const SigmaSeries gc = universal_series(c, max_n);
    r.check("G(c) group-like", is_group_like(gc));
    r.check("G(c) * (s o G(c)) = unit", convolve(gc, antipode(gc)) == unit && convolve(antipode(gc), gc) == unit);
  }
  r.check("Q series not group-like", max_n < 2 || !is_group_like(SigmaSeries(
                                                       {SigmaElem::unit(), SigmaElem::Q(Composition{{1}}),
                                                        SigmaElem::Q(Composition{{1, 2}})})));

  auto causal = std::make_shared<CausalWordSystem>(
      std::map<std::string, Rational>{{"a", 0}, {"b", 1}, {"s", Rational(-1, 2)}});
  const PolynomialSystem poly;
  const std::vector<const ProductSystem*> systems{&poly, causal.get()};
  const std::vector<Insertion> two{{FormalSymbol::j, "a"}, {FormalSymbol::g, "b"}};
  for (int trial = 0; trial < 2; ++trial) {
    const SigmaSeries s = random_series(max_n, rng), t = random_series(max_n, rng);
    const SigmaSeries st = convolve(s, t);
    for (const ProductSystem* sys : systems) {
      r.check("S_{s*t} = S_s S_t", t_exponential(*sys, st, "a", order) ==
                                       t_exponential(*sys, s, "a", order) * t_exponential(*sys, t, "a", order));
      r.check("S_{s*t} = S_s S_t", t_exponential(*sys, st, two, order) ==
                                       t_exponential(*sys, s, two, order) * t_exponential(*sys, t, two, order));
    }
  }
  for (const ProductSystem* sys : systems) {
    const TruncSeries one = TruncSeries::constant(word_unit(), order, sys->commutative());
    r.check("S_unit = 1", t_exponential(*sys, unit, "a", order) == one);
    const Laurent c = Laurent::inverse_i_hbar();
    r.check("group-like inverse", t_exponential(*sys, g, two, order, c) * t_exponential(*sys, antipode(g), two, order, c) ==
                                          one &&
                                      t_exponential(*sys, antipode(g), two, order, c) * t_exponential(*sys, g, two, order, c) ==
                                          one);
    const unsigned po = std::min(order, 3u);
    const SigmaSeries gp = universal_series(1, static_cast<int>(po));
    r.check("perturbed = shifted argument",
            perturb_coderivation(*sys, gp, "s", "a", po, c) ==
                t_exponential(*sys, gp, {{FormalSymbol::g, "s"}, {FormalSymbol::j, "a"}}, po, c));
  }
  const SigmaSeries e = universal_series(2, max_n);
  r.check("exponential splitting", t_exponential(poly, e, {{FormalSymbol::j, "a"}, {FormalSymbol::j, "b"}}, order) ==
                                       t_exponential(poly, e, "a", order) * t_exponential(poly, e, "b", order));

  const unsigned k = 6;
  const TruncSeries classical = evaluate_at(t_exponential(poly, universal_series(1, k), "a", k), {{"a", 1}});
  Rational total = 0, expected = 0;
  for (unsigned m = 0; m <= k; ++m) {
    total += classical.coeff(0, m).coeff(Word{}).coeff(0).re();
    expected += inverse_factorial(m).re();
  }
  r.check("classical exponential", total == expected && classical.terms().size() == k + 1);
  r.payload()["classicalExponential"] = rational_string(total);

  r.check("homomorphism check (polynomial)", homomorphism_check(poly, 4, {"a", "b"}));
  r.check("homomorphism check (causal)", homomorphism_check(*causal, 4, {"a", "b", "s"}));
  r.check("negative control detected", !homomorphism_check(FactorDroppingSystem(causal), 3, {"a", "b"}));
  return r;
}

RunReport causal_report(int n, unsigned order) {
  RunReport r("causal suite", {{"n", n}, {"order", order}});
  for (int m = 1; m <= n; ++m) {
    const LabelSet ground = canonical(m);
    const auto comps = compositions_of(ground);
    const auto configs = permutations_of(m);
    std::vector<CheckList> items(configs.size());
    parallel_for(configs.size(), [&](std::size_t k) {
      const TimedDecoration d = at_times(configs[k]);
      for (const auto& g : comps) {
        if (!respects(d, g)) continue;
        bool ok = true;
        for (const auto& f : comps) ok = ok && causal_factorization_check(SigmaElem::H(f), g, d);
        items[k].emplace_back("causal factorization", ok);
      }
    });
    record(r, items);
  }
  for (int ny = 1; ny <= 2; ++ny) {
    for (int ni = 1; ni <= 2; ++ni) {
      for (const auto& ti : permutations_of(ni)) {
        for (const auto& ty : permutations_of(ny, 10)) {
          TimedDecoration y, i, early;
          for (int k = 0; k < ny; ++k) {
            y[-(k + 1)] = {"s" + std::to_string(k + 1), Rational(ty[k])};
            early[-(k + 1)] = {"s" + std::to_string(k + 1), Rational(-ty[k])};
          }
          for (int k = 0; k < ni; ++k) i[k + 1] = {"a" + std::to_string(k + 1), Rational(ti[k])};
          r.check("retarded support", retarded_product(y, i).is_zero());
          r.check("advanced support", advanced_product(early, i).is_zero());
          r.check("nonzero control", !retarded_product(early, i).is_zero());
        }
      }
    }
  }
  for (int m = 1; m <= std::min(n, 3); ++m) {
    const LabelSet ground = canonical(m);
    for (const auto& times : permutations_of(m)) {
      const TimedDecoration d = at_times(times);
      for (const auto& c : enumerate_cells(ground)) {
        const WordElem value = generalized_T(dynkin(c), d);
        for (const auto& s : c.positive_sides()) {
          if (respects(d, Composition{ground - s, s})) r.check("Dynkin support", value.is_zero());
        }
      }
    }
    const TimedDecoration d = at_times(permutations_of(m).back());
    for (const auto& f : compositions_of(ground)) {
      WordElem sum;
      for (const auto& [s, t] : ordered_splits(ground)) {
        TimedDecoration ds, dt;
        for (Label l : s) ds[l] = d.at(l);
        for (Label l : t) dt[l] = d.at(l);
        sum += word_product(generalized_T(SigmaElem::H(restrict(f, s)), ds),
                            reverse_T(SigmaElem::H(restrict(f, t)), dt));
      }
      r.check("reverse products invert T", sum.is_zero());
    }
  }
  const TimedObservable a{"a", 1};
  for (long ts : {0L, 1L, 4L}) {
    const TimedObservable s{"s", Rational(ts)};
    for (unsigned k = 1; k <= order; ++k) {
      const TruncSeries z = generating_function(a, s, k);
      r.check("Z = S^-1(gS) S(gS + jA)", z == factorized_generating_function(a, s, k, ArrowDirection::down));
      r.check("W = S(gS + jA) S^-1(gS)", advanced_generating_function(a, s, k) ==
                                             factorized_generating_function(a, s, k, ArrowDirection::up));
      r.check("Z at g^0 = S-matrix", set_zero(z, FormalSymbol::g) == smatrix(a, k));
      r.check("hbar bound", satisfies_hbar_bound(z));
    }
    r.check("Bogoliubov", bogoliubov(a, s, order) == interacting_observable(a, s, order));
  }
  return r;
}

namespace {

std::vector<TimedObservable> probes(const Model& model) {
  std::vector<TimedObservable> out;
  for (const auto& o : model.observables()) {
    if (o.id != model.interaction()) out.push_back(o);
  }
  return out;
}

}  // namespace

RunReport toy_demo(const Model& model, unsigned order) {
  RunReport r("toy demo", {{"order", order}});
  r.payload()["model"] = to_json(model);
  Json results = Json::object();
  for (const auto& a : probes(model)) {
    Json entry;
    const TruncSeries s = smatrix(a, order);
    r.check("S-matrix inverse", s * inverse_smatrix(a, order) == TruncSeries::constant(word_unit(), order));
    r.check("hbar bound", satisfies_hbar_bound(s));
    entry["smatrix"] = to_json(s);
    if (!model.interaction().empty()) {
      const TimedObservable& si = model.get(model.interaction());
      const TruncSeries z = generating_function(a, si, order);
      r.check("Z = S^-1(gS) S(gS + jA)", z == factorized_generating_function(a, si, order, ArrowDirection::down));
      r.check("hbar bound", satisfies_hbar_bound(z));
      entry["generatingFunction"] = to_json(z);
      entry["interactingObservable"] = to_json(interacting_observable(a, si, order));
    }
    results[a.id] = std::move(entry);
  }
  r.payload()["results"] = std::move(results);
  return r;
}

RunReport toy_bogoliubov(const Model& model, unsigned order) {
  if (model.interaction().empty()) throw DomainError("toy bogoliubov: the model has no interaction");
  RunReport r("toy bogoliubov", {{"order", order}});
  const TimedObservable& si = model.get(model.interaction());
  Json results = Json::object();
  for (const auto& a : probes(model)) {
    const TruncSeries lhs = bogoliubov(a, si, order);
    const TruncSeries rhs = interacting_observable(a, si, order);
    r.check("Bogoliubov", lhs == rhs);
    results[a.id] = {{"interactingObservable", to_json(rhs)}, {"fromGeneratingFunction", to_json(lhs)}};
  }
  r.payload()["model"] = to_json(model);
  r.payload()["results"] = std::move(results);
  return r;
}

}  // namespace species
