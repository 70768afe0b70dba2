#include "statesurf/jones.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

#include "statesurf/error.hpp"
#include "statesurf/ribbon.hpp"
#include "statesurf/state.hpp"

namespace statesurf {

namespace {

// counts[b][v]: number of terms with b B-resolutions (resp. b kept edges)
// and v circles (resp. faces).
using CountTable = std::vector<std::vector<std::int64_t>>;

void check_limit(const LinkDiagram& d, const BracketOptions& options) {
  if (d.crossing_count() > options.max_crossings) {
    throw Error(ErrorKind::CrossingLimitExceeded,
                "refusing 2^" + std::to_string(d.crossing_count()) + " bracket expansion (limit " +
                    std::to_string(options.max_crossings) + " crossings)");
  }
  if (d.crossing_count() > 62) {
    throw Error(ErrorKind::CrossingLimitExceeded, "bracket expansion supports at most 62 crossings");
  }
}

// Enumerates masks in [0, 2^c) split over threads; `make_counter` builds a
// per-thread callable mapping a mask to its circle/face count.
template <typename MakeCounter>
CountTable tabulate(int c, unsigned threads, MakeCounter make_counter) {
  const std::uint64_t total = std::uint64_t{1} << c;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<CountTable> partial(threads, CountTable(c + 1, std::vector<std::int64_t>(c + 2, 0)));
  auto work = [&](unsigned t) {
    auto count = make_counter();
    auto& table = partial[t];
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      table[std::popcount(mask)][count(mask)] += 1;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  CountTable sum(c + 1, std::vector<std::int64_t>(c + 2, 0));
  for (const auto& table : partial) {
    for (int b = 0; b <= c; ++b) {
      for (int v = 0; v <= c + 1; ++v) sum[b][v] += table[b][v];
    }
  }
  return sum;
}

LaurentPoly assemble(int c, const CountTable& counts) {
  const LaurentPoly loop = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> loop_powers{LaurentPoly::constant(1)};
  for (int i = 1; i <= c + 1; ++i) loop_powers.push_back(loop_powers.back() * loop);

  LaurentPoly bracket("A");
  for (int b = 0; b <= c; ++b) {
    for (int v = 1; v <= c + 1; ++v) {
      const std::int64_t n = counts[b][v];
      if (n == 0) continue;
      LaurentPoly term = loop_powers[v - 1].shifted(c - 2 * b);
      term *= mpz_class(static_cast<long>(n));
      bracket += term;
    }
  }
  return bracket;
}

class StateCircleCounter {
 public:
  explicit StateCircleCounter(const LinkDiagram& d)
      : mates_(d.mates().begin(), d.mates().end()), seen_(d.slot_count()) {}

  int operator()(std::uint64_t mask) {
    // u -> mate(partner(u)) runs each state circle once in each direction.
    std::fill(seen_.begin(), seen_.end(), 0);
    int cycles = 0;
    const int slots = static_cast<int>(mates_.size());
    for (int start = 0; start < slots; ++start) {
      if (seen_[start]) continue;
      ++cycles;
      int u = start;
      do {
        seen_[u] = 1;
        const int x = crossing_of(u);
        const auto res = ((mask >> x) & 1u) ? Resolution::B : Resolution::A;
        u = mates_[slot_of(x, smoothing_partner(position_of(u), res))];
      } while (u != start);
    }
    return cycles / 2;
  }

 private:
  std::vector<int> mates_;
  std::vector<std::uint8_t> seen_;
};

long to_long(const mpz_class& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("Jones coefficient does not fit in a long");
  return value.get_si();
}

}  // namespace

LaurentPoly bracket_statesum(const LinkDiagram& d, const BracketOptions& options) {
  check_limit(d, options);
  const int c = d.crossing_count();
  if (c == 0) return LaurentPoly::constant(1);
  const auto counts = tabulate(c, options.threads, [&] { return StateCircleCounter(d); });
  return assemble(c, counts);
}

LaurentPoly bracket_subgraph(const LinkDiagram& d, const BracketOptions& options) {
  check_limit(d, options);
  const int c = d.crossing_count();
  if (c == 0) return LaurentPoly::constant(1);
  const RibbonGraph ribbon = build_ribbon(d);
  const auto counts = tabulate(c, options.threads, [&] {
    return [counter = RibbonFaceCounter(ribbon)](std::uint64_t mask) mutable { return counter.faces(mask); };
  });
  return assemble(c, counts);
}

LaurentPoly normalize_bracket(const LinkDiagram& d, const LaurentPoly& bracket) {
  const int w = d.writhe();
  LaurentPoly normalized = bracket.shifted(-3 * w);
  if (w % 2 != 0) normalized *= mpz_class(-1);
  LaurentPoly in_q = normalized.rescaled(-1, "q");

  const int residue = (2 * (d.component_count() - 1)) % 4;
  for (const auto& [e, coefficient] : in_q.terms()) {
    if (((e % 4) + 4) % 4 != residue) {
      throw Error(ErrorKind::ExponentParity, "Jones exponent t^(" + std::to_string(e) + "/4) breaks the " +
                                                 std::to_string(d.component_count()) +
                                                 "-component parity pattern");
    }
  }
  return in_q;
}

LaurentPoly jones(const LinkDiagram& d, BracketMethod method, const BracketOptions& options) {
  return normalize_bracket(
      d, method == BracketMethod::StateSum ? bracket_statesum(d, options) : bracket_subgraph(d, options));
}

std::string format_jones(const LaurentPoly& jones_in_q) { return jones_in_q.to_string("t", 4); }

LaurentPoly mirror_jones(const LaurentPoly& jones_in_q) { return jones_in_q.rescaled(-1, "q"); }

JonesStats jones_stats(const LaurentPoly& j) {
  if (j.is_zero()) throw std::invalid_argument("jones_stats of the zero polynomial");
  const int lo = j.min_degree();
  const int hi = j.max_degree();
  if ((hi - lo) % 4 != 0) {
    throw Error(ErrorKind::ExponentParity, "Jones exponents do not lie on a single t-lattice");
  }
  JonesStats st;
  st.span = (hi - lo) / 4;
  if (st.span >= 2) {
    st.beta = to_long(j.coefficient(lo + 4));
    st.beta_prime = to_long(j.coefficient(hi - 4));
  }
  st.t_sum = std::abs(st.beta) + std::abs(st.beta_prime);
  return st;
}

CoeffIdentityReport coeff_identity_check(const LinkDiagram& d, const BracketOptions& options) {
  const DiagramProperties props = classify(d);
  if (!props.alternating || !props.reduced) return coeff_identity_check(d, JonesStats{});
  return coeff_identity_check(d, jones_stats(jones(d, BracketMethod::StateSum, options)));
}

CoeffIdentityReport coeff_identity_check(const LinkDiagram& d, const JonesStats& st) {
  const DiagramProperties props = classify(d);
  if (!props.alternating || !props.reduced) {
    throw Error(ErrorKind::HypothesisViolated,
                "coefficient identities need a reduced alternating diagram (alternating=" +
                    std::string(props.alternating ? "true" : "false") +
                    ", reduced=" + (props.reduced ? "true" : "false") + ")");
  }
  const int c = d.crossing_count();
  const auto ga = simplify_graph(state_graph(d, KauffmanState::all(c, Resolution::A)));
  const auto gb = simplify_graph(state_graph(d, KauffmanState::all(c, Resolution::B)));

  CoeffIdentityReport r;
  r.abs_beta = std::abs(st.beta);
  r.abs_beta_prime = std::abs(st.beta_prime);
  r.one_minus_chi_ga = 1 - ga.euler_characteristic();
  r.one_minus_chi_gb = 1 - gb.euler_characteristic();
  r.beta_matches_gb = r.abs_beta == r.one_minus_chi_gb && r.abs_beta_prime == r.one_minus_chi_ga;
  r.beta_matches_ga = r.abs_beta == r.one_minus_chi_ga && r.abs_beta_prime == r.one_minus_chi_gb;
  return r;
}

}  // namespace statesurf
