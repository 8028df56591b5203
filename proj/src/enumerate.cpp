#include "pnc/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "pnc/geometry.hpp"

namespace pnc {

namespace {

struct Walker {
  const EnumBounds& bounds;
  const EnumFilters& filters;
  const std::function<void(const KeySequence&)>& emit;

  std::vector<long long> w;
  std::vector<long long> d;      // running gcd ladder
  std::vector<long long> alpha;  // alpha_1..

  bool passes_terminal(const KeySequence& seq) const {
    if (filters.algebraic || filters.non_algebraic) {
      bool alg = is_algebraic(seq);
      if (filters.algebraic && !alg) return false;
      if (filters.non_algebraic && alg) return false;
    }
    if (filters.essential && !is_essential(seq)) return false;
    if (filters.gorenstein || filters.rational) {
      if (!is_primitive(seq)) return false;
      SingularityReport rep = singularity_report(seq);
      if (filters.gorenstein && !rep.is_gorenstein) return false;
      if (filters.rational && !rep.is_rational) return false;
    }
    return true;
  }

  // Interior clause checks for the entry just placed at position j >= 1.
  // Extension means the entry becomes omega_j with j <= n.
  bool may_extend(int j) const {
    if (filters.primitive && w[static_cast<size_t>(j)] < 1) return false;
    if (j >= 1 && filters.essential && alpha[static_cast<size_t>(j - 1)] < 2)
      return false;
    if (filters.normal) {
      if (j == 1) {
        // N1(b)+(c): 0 < omega_0 < omega_1 with alpha_1 >= 2
        if (!(w[0] < w[1]) || alpha[0] < 2) return false;
      } else if (j >= 2) {
        KeySequence seq(w);
        GcdLadder lad;
        lad.d = d;
        lad.alpha_ = alpha;
        if (hits_excluded_value(seq, lad, j, w[static_cast<size_t>(j)]))
          return false;
      }
    }
    return true;
  }

  void step(int pos) {
    if (pos >= 2 && d[static_cast<size_t>(pos - 1)] == 1) {
      KeySequence seq(w);
      bool ok = true;
      if (filters.primitive && !is_primitive(seq)) ok = false;
      if (ok && filters.normal && !normal_form_check(seq).ok) ok = false;
      if (ok && passes_terminal(seq)) emit(seq);
    }
    if (pos >= bounds.max_length) return;
    if (pos >= 2 && !may_extend(pos - 1)) return;

    long long hi = bounds.max_entry;
    if (pos >= 2) {
      // property 3: omega_{pos} < alpha_{pos-1} * omega_{pos-1}
      long long cap = alpha[static_cast<size_t>(pos - 2)] * w[static_cast<size_t>(pos - 1)];
      hi = std::min(hi, cap - 1);
    }
    long long lo = filters.primitive ? 1 : -bounds.max_entry;
    for (long long v = lo; v <= hi; ++v) {
      w.push_back(v);
      long long dk = std::gcd(d.back(), std::llabs(v));
      alpha.push_back(d.back() / dk);
      d.push_back(dk);
      step(pos + 1);
      w.pop_back();
      d.pop_back();
      alpha.pop_back();
    }
  }

  void run(long long w0) {
    w.assign(1, w0);
    d.assign(1, w0);
    alpha.clear();
    step(1);
  }
};

}  // namespace

void enumerate_key_sequences(const EnumBounds& bounds, const EnumFilters& filters,
                             const std::function<void(const KeySequence&)>& emit) {
  if (bounds.max_entry > 10'000 || bounds.max_length > 8)
    fail(Errc::BoundsTooLarge, "enumeration bounds exceed desk scale");
  if (bounds.max_entry < 1 || bounds.max_length < 2)
    fail(Errc::InconsistentInput, "enumeration bounds too small");
  Walker walker{bounds, filters, emit, {}, {}, {}};
  for (long long w0 = 1; w0 <= bounds.max_entry; ++w0) walker.run(w0);
}

std::vector<KeySequence> enumerate_collect(const EnumBounds& bounds,
                                           const EnumFilters& filters, int jobs) {
  if (jobs <= 1) {
    std::vector<KeySequence> out;
    enumerate_key_sequences(bounds, filters,
                            [&](const KeySequence& s) { out.push_back(s); });
    return out;
  }
  if (bounds.max_entry > 10'000 || bounds.max_length > 8)
    fail(Errc::BoundsTooLarge, "enumeration bounds exceed desk scale");
  // Shard the omega_0 strata; concatenation in omega_0 order preserves the
  // lexicographic output order.
  std::vector<std::vector<KeySequence>> buckets(static_cast<size_t>(bounds.max_entry));
  std::vector<std::thread> threads;
  int nthreads = std::min<long long>(jobs, bounds.max_entry);
  for (int t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t]() {
      for (long long w0 = t + 1; w0 <= bounds.max_entry; w0 += nthreads) {
        Walker walker{bounds, filters,
                      [&](const KeySequence& s) {
                        buckets[static_cast<size_t>(w0 - 1)].push_back(s);
                      },
                      {}, {}, {}};
        walker.run(w0);
      }
    });
  }
  for (auto& th : threads) th.join();
  std::vector<KeySequence> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace pnc
