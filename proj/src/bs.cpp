#include <npcx/bs.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

namespace npcx {

namespace {

Rat pow2(long long k) {
  if (k >= 0) return Rat(Int(1) << k);
  return Rat(Int(1), Int(1) << (-k));
}

bool integral(const Rat& r) { return denominator(r) == 1; }

}  // namespace

DyadicAffine compose(const DyadicAffine& f, const DyadicAffine& g) {
  return {f.k + g.k, pow2(f.k) * g.b + f.b};
}

DyadicAffine inverse(const DyadicAffine& f) {
  return {-f.k, -pow2(-f.k) * f.b};
}

DyadicAffine affine_a() { return {0, 1}; }
DyadicAffine affine_t() { return {1, 0}; }

bool is_identity(const DyadicAffine& f) { return f.k == 0 && f.b == 0; }

bool in_cyclic_a(const DyadicAffine& f) { return f.k == 0 && integral(f.b); }

DyadicAffine affine_of_word(const FreeWord& w) {
  DyadicAffine r;
  for (const auto& run : w.runs()) {
    DyadicAffine step;
    switch (run.gen) {
      case 0:
        step = {0, run.exp};
        break;
      case 1:
        step = {run.exp, 0};
        break;
      default:
        throw std::invalid_argument("affine_of_word: alphabet is {a, t}");
    }
    r = compose(r, step);
  }
  return r;
}

FreeWord BrittonForm::word() const {
  FreeWord w;
  if (p != 0) w.push(1, -p);
  if (m != 0) w.push(0, m);
  if (q != 0) w.push(1, q);
  return w;
}

DyadicAffine affine_of(const BrittonForm& n) {
  return compose(compose(DyadicAffine{-n.p, 0}, DyadicAffine{0, n.m}),
                 DyadicAffine{n.q, 0});
}

SampleReport bs_faithfulness_test(int samples, std::uint64_t seed) {
  SampleReport rep{"bs_faithfulness", seed, samples, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> stable(0, 8);
  std::uniform_int_distribution<long long> trans(-64, 64);
  for (int s = 0; s < samples; ++s) {
    BrittonForm n{stable(rng), trans(rng), stable(rng)};
    if (n.p > 0 && n.q > 0 && n.m % 2 == 0) ++n.m;
    if (n.trivial()) n.q = 1;
    const DyadicAffine direct = affine_of(n);
    const bool ok =
        !is_identity(direct) && direct == affine_of_word(n.word());
    if (!ok) ++rep.violations;
  }
  return rep;
}

SplitElement split_reduce(const FreeWord& w) {
  SplitElement e;
  for (const auto& run : w.runs()) {
    switch (run.gen) {
      case 0:
      case 1:
        e.bs.push(run.gen, run.exp);
        break;
      case 2:
        e.eu += run.exp;
        break;
      case 3:
        e.ev += run.exp;
        break;
      default:
        throw std::invalid_argument("split_reduce: alphabet is {a, t, u, v}");
    }
  }
  return e;
}

bool split_commutator_with_a_trivial(const FreeWord& w) {
  // Central letters cancel in any commutator; the BS part commutes
  // with the translation a exactly when it is itself a translation.
  const SplitElement e = split_reduce(w);
  return affine_of_word(e.bs).k == 0;
}

namespace {

// Append a piece to the syllable list, coalescing same-factor and
// edge-group (factor 0) neighbours.
void append_syllable(std::vector<Syllable>& syl, int factor,
                     const DyadicAffine& g) {
  if (!syl.empty() &&
      (syl.back().factor == factor || syl.back().factor == 0 ||
       factor == 0)) {
    syl.back().g = compose(syl.back().g, g);
    if (syl.back().factor == 0) syl.back().factor = factor;
    return;
  }
  syl.push_back({factor, g});
}

}  // namespace

std::vector<Syllable> amalgam_reduce(const FreeWord& w) {
  std::vector<Syllable> syl;
  for (const auto& run : w.runs()) {
    switch (run.gen) {
      case 0:
        append_syllable(syl, 0, {0, run.exp});
        break;
      case 1:
        append_syllable(syl, 1, {run.exp, 0});
        break;
      case 2:
        append_syllable(syl, 2, {run.exp, 0});
        break;
      default:
        throw std::invalid_argument(
            "amalgam_reduce: alphabet is {a, s_1, s_2}");
    }
  }
  // Pinch: syllables lying in the edge group <a> dissolve into a
  // neighbour; rebuilding through append_syllable re-coalesces.
  bool changed = true;
  while (changed && syl.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < syl.size(); ++i) {
      if (!in_cyclic_a(syl[i].g)) continue;
      std::vector<Syllable> next;
      const bool last = i + 1 == syl.size();
      for (std::size_t j = 0; j < syl.size(); ++j) {
        if (j == i) continue;
        DyadicAffine g = syl[j].g;
        if (!last && j == i + 1) g = compose(syl[i].g, g);
        if (last && j + 1 == i) g = compose(g, syl[i].g);
        append_syllable(next, syl[j].factor, g);
      }
      syl = std::move(next);
      changed = true;
      break;
    }
  }
  if (syl.size() == 1 && is_identity(syl[0].g)) syl.clear();
  return syl;
}

bool amalgam_trivial(const FreeWord& w) {
  const std::vector<Syllable> syl = amalgam_reduce(w);
  if (syl.empty()) return true;
  if (syl.size() == 1) return is_identity(syl[0].g);
  return false;
}

std::string BsDemoReport::text() const {
  std::ostringstream os;
  os << "split model: [(tv)(tu)^-1, a] trivial: "
     << (split_commutator_trivial ? "yes" : "no") << '\n';
  os << "amalgam model: [s_1 s_2^-1, a] nontrivial: "
     << (amalgam_commutator_nontrivial ? "yes" : "no") << " (syllables "
     << amalgam_syllables << ", middle translation " << middle_translation
     << ")\n";
  os << "affine faithfulness: " << faithfulness.violations << " violations in "
     << faithfulness.samples << " samples (seed " << faithfulness.seed
     << ")\n";
  os << "overall: " << (ok ? "pass" : "fail") << '\n';
  return os.str();
}

BsDemoReport run_bs_demo() {
  BsDemoReport rep;

  // t a t^-1 = a^2 holds in the affine model.
  const DyadicAffine conj =
      compose(compose(affine_t(), affine_a()), inverse(affine_t()));
  const bool defining = conj == DyadicAffine{0, 2};

  // Split model: w = (tv)(tu)^-1 over a=0, t=1, u=2, v=3.
  FreeWord split;
  split.push(1, 1);
  split.push(3, 1);
  split.push(2, -1);
  split.push(1, -1);
  rep.split_commutator_trivial = split_commutator_with_a_trivial(split);

  // Amalgam model: c = [s_1 s_2^-1, a] over a=0, s_1=1, s_2=2.
  FreeWord comm;
  comm.push(1, 1);
  comm.push(2, -1);
  comm.push(0, 1);
  comm.push(2, 1);
  comm.push(1, -1);
  comm.push(0, -1);
  const std::vector<Syllable> syl = amalgam_reduce(comm);
  rep.amalgam_syllables = static_cast<int>(syl.size());
  rep.amalgam_commutator_nontrivial = !amalgam_trivial(comm);
  if (syl.size() == 3 && syl[1].g.k == 0)
    rep.middle_translation = syl[1].g.b;

  rep.faithfulness = bs_faithfulness_test(1000, 20260814);

  rep.ok = defining && rep.split_commutator_trivial &&
           rep.amalgam_commutator_nontrivial &&
           rep.faithfulness.violations == 0;
  return rep;
}

}  // namespace npcx
