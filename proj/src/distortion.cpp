#include <npcx/distortion.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <new>
#include <sstream>
#include <stdexcept>

namespace npcx {

FreeAutomorphism staircase_automorphism(int k) {
  if (k < 1) throw std::invalid_argument("staircase_automorphism: k < 1");
  FreeAutomorphism a;
  a.rank = k;
  a.images.resize(k);
  a.inverse_images.resize(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) a.images[i].push(j, 1);
    if (i > 0) a.inverse_images[i].push(i - 1, -1);
    a.inverse_images[i].push(i, 1);
  }
  return a;
}

Int staircase_length(int k, int i, long long n) {
  if (k < 1 || i < 1 || i > k)
    throw std::invalid_argument("staircase_length: need 1 <= i <= k");
  if (n < 0) throw std::invalid_argument("staircase_length: n < 0");
  // Layer j holds L_m(j) for m = 0..n; the next layer is the running
  // sum over m >= 1 plus one, with L_0(j) = 1.
  std::vector<Int> layer(static_cast<std::size_t>(n) + 1, Int(1));
  for (int j = 2; j <= i; ++j) {
    std::vector<Int> next(layer.size(), Int(1));
    Int sum = 0;
    for (long long m = 1; m <= n; ++m) {
      sum += layer[static_cast<std::size_t>(m)];
      next[static_cast<std::size_t>(m)] = sum + 1;
    }
    layer = std::move(next);
  }
  return layer[static_cast<std::size_t>(n)];
}

WitnessSize staircase_witness(int k, long long n) {
  if (n < 0) throw std::invalid_argument("staircase_witness: n < 0");
  WitnessSize w;
  w.ambient = 3 * n;
  w.kernel = Int(n) * staircase_length(k, k, n);
  return w;
}

std::size_t GrowthTable::exact_rows() const {
  std::size_t c = 0;
  for (const auto& r : rows)
    if (!r.truncated) ++c;
  return c;
}

bool GrowthTable::monotone() const {
  Int prev = -1;
  for (const auto& r : rows) {
    if (r.truncated) continue;
    if (r.length < prev) return false;
    prev = r.length;
  }
  return true;
}

std::string GrowthTable::to_csv() const {
  std::ostringstream os;
  os << "x,ambient_budget,kernel_length\n";
  for (const auto& r : rows) {
    os << r.x << ',' << r.ambient << ',';
    if (r.truncated)
      os << '>' << cap;
    else
      os << r.length;
    os << '\n';
  }
  return os.str();
}

GrowthTable growth_table_from_csv(const std::string& name,
                                  const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "x,ambient_budget,kernel_length")
    throw std::invalid_argument("growth_table_from_csv: bad header");
  GrowthTable t;
  t.name = name;
  long long max_bound = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("growth_table_from_csv: bad row '" + line +
                                  "'");
    GrowthRow r;
    r.x = std::stoll(line.substr(0, c1));
    r.ambient = std::stoll(line.substr(c1 + 1, c2 - c1 - 1));
    const std::string cell = line.substr(c2 + 1);
    if (!cell.empty() && cell[0] == '>') {
      r.truncated = true;
      max_bound = std::max(max_bound, std::stoll(cell.substr(1)));
    } else {
      r.length = Int(cell);
    }
    t.rows.push_back(std::move(r));
  }
  if (max_bound > 0) t.cap = max_bound;
  return t;
}

double log_big(const Int& v) {
  if (v <= 0) throw std::invalid_argument("log_big: nonpositive value");
  if (v == 1) return 0.0;
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 960) return std::log(v.convert_to<double>());
  const unsigned shift = bits - 52;
  const Int top = v >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

namespace {

double lsq_slope(const std::vector<double>& t, const std::vector<double>& y) {
  const double n = static_cast<double>(t.size());
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  const double denom = n * stt - st * st;
  if (std::abs(denom) < 1e-12) return 0.0;
  return (n * sty - st * sy) / denom;
}

}  // namespace

FitResult fit_growth(const GrowthTable& table) {
  FitResult res;
  std::vector<double> xs, lf;
  bool all_equal = true;
  const Int* first = nullptr;
  for (const auto& r : table.rows) {
    if (r.truncated) continue;
    if (r.length <= 0) {
      res.error = "nonpositive length in row x=" + std::to_string(r.x);
      return res;
    }
    if (!first)
      first = &r.length;
    else if (r.length != *first)
      all_equal = false;
    xs.push_back(static_cast<double>(r.x));
    lf.push_back(log_big(r.length));
  }
  if (xs.size() < 8) {
    res.error = "too few exact rows (" + std::to_string(xs.size()) + " < 8)";
    return res;
  }
  if (all_equal) {
    res.ok = true;
    res.constant = true;
    return res;
  }

  const std::vector<double> lf0 = lf;  // logs of the original lengths
  std::vector<double> lvals = lf;      // logs of the current layer
  std::map<long long, std::size_t> by_x;
  for (std::size_t i = 0; i < xs.size(); ++i)
    by_x[static_cast<long long>(xs[i])] = i;

  for (int depth = 0; depth <= 3; ++depth) {
    std::vector<double> lr;  // ln of f(2x)/f(x)^2, x ascending
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto it = by_x.find(2 * static_cast<long long>(xs[i]));
      if (it != by_x.end()) lr.push_back(lvals[it->second] - 2 * lvals[i]);
    }
    if (lr.size() < 2) {
      res.error = "too few doubling pairs";
      return res;
    }
    const bool subexp = lr.back() <= lr.front() + std::log(0.6) &&
                        lr.back() < std::log(0.9);
    if (subexp) {
      std::vector<double> lt, ly, tt, ty;
      const double x_max = xs.back();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < x_max / 4.0) continue;
        lt.push_back(std::log(xs[i]));
        ly.push_back(lvals[i]);
        tt.push_back(xs[i]);
        ty.push_back(lf0[i]);
      }
      res.ok = true;
      res.depth = depth;
      res.slope = lsq_slope(lt, ly);
      if (depth >= 1) res.base = std::exp(lsq_slope(tt, ty));
      return res;
    }
    for (double& v : lvals) v = std::log(std::max(v, 1e-9));
  }
  res.error = "no sub-exponential layer within depth 3";
  return res;
}

GrowthTable monodromy_orbit_table(const SemidirectAction& action,
                                  int generator, int m_max, long long cap) {
  if (action.base_rank != 1)
    throw std::invalid_argument(
        "monodromy_orbit_table: base must have exactly one generator");
  if (generator < 0 || generator >= action.kernel_rank)
    throw std::invalid_argument("monodromy_orbit_table: generator out of range");
  if (action.phi[0].inverse_images.empty())
    throw std::invalid_argument(
        "monodromy_orbit_table: action lacks inverse images");

  struct Direction {
    const std::vector<FreeWord>* images;
    FreeWord w;
    bool alive = true;
    int died_at = -1;
  };
  Direction dirs[2] = {
      {&action.phi[0].images, FreeWord::generator(generator)},
      {&action.phi[0].inverse_images, FreeWord::generator(generator)}};

  GrowthTable t;
  t.name = "monodromy_orbit";
  t.cap = cap;
  for (int m = 1; m <= m_max; ++m) {
    for (auto& d : dirs) {
      if (!d.alive) continue;
      try {
        d.w = substitute(*d.images, d.w, cap);
      } catch (const WordCapError&) {
        d.alive = false;
        d.died_at = m;
        d.w = FreeWord();
      } catch (const std::bad_alloc&) {
        d.alive = false;
        d.died_at = m;
        d.w = FreeWord();
      }
    }
    GrowthRow row;
    row.x = m;
    row.ambient = 2ll * m + 1;
    // A direction that exceeded the cap at this very step certifies a
    // length above every materialized value, so the minimum over the
    // surviving directions is still exact; a direction lost at an
    // earlier step certifies nothing about step m.
    bool exact = dirs[0].alive || dirs[1].alive;
    for (const auto& d : dirs)
      if (!d.alive && d.died_at != m) exact = false;
    if (exact) {
      Int best = -1;
      for (const auto& d : dirs) {
        if (!d.alive) continue;
        const Int len(d.w.length());
        if (best < 0 || len < best) best = len;
      }
      row.length = best;
    } else {
      row.truncated = true;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

GrowthTable chain_growth_table(const SemidirectAction& action, int generator,
                               int n_max, long long cap) {
  if (action.base_rank < 2)
    throw std::invalid_argument(
        "chain_growth_table: base needs at least two generators");
  if (generator < 0 || generator >= action.kernel_rank)
    throw std::invalid_argument("chain_growth_table: generator out of range");

  const FreeAutomorphism stair = staircase_automorphism(2);
  const FreeWord b = FreeWord::generator(generator);

  GrowthTable t;
  t.name = "chain_growth";
  t.cap = cap;
  for (long long n = 1; n <= n_max; ++n) {
    FreeWord wn = FreeWord::generator(1);
    for (long long j = 0; j < n; ++j) wn = substitute(stair.images, wn);
    // The witness (phi^n(x_2))^n is positive, so reading its letters as
    // base generators t_1, t_2 needs no renaming.
    const FreeWord g1 = power(wn, n);
    GrowthRow row;
    row.x = n;
    row.ambient = 2 * g1.length() + 1;
    try {
      row.length = Int(act(action, g1, b, cap).length());
    } catch (const WordCapError&) {
      row.truncated = true;
    } catch (const std::bad_alloc&) {
      row.truncated = true;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

bool upper_model_ok(const GrowthTable& table, const SemidirectAction& action) {
  long long lmax = 1;
  for (const auto& a : action.phi) {
    for (const auto& w : a.images) lmax = std::max(lmax, w.length());
    for (const auto& w : a.inverse_images) lmax = std::max(lmax, w.length());
  }
  const double log_l = std::log(static_cast<double>(lmax));
  for (const auto& r : table.rows) {
    if (r.truncated) continue;
    const long long applied = (r.ambient - 1) / 2;
    if (log_big(r.length) > static_cast<double>(applied) * log_l + 1e-6)
      return false;
  }
  return true;
}

}  // namespace npcx
