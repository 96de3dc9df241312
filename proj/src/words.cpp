#include "npcx/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace npcx {

FreeWord FreeWord::generator(int g, long long exp) {
  FreeWord w;
  w.push(g, exp);
  return w;
}

void FreeWord::push(int g, long long exp) {
  if (exp == 0) return;
  if (!runs_.empty() && runs_.back().gen == g) {
    letters_ -= std::abs(runs_.back().exp);
    runs_.back().exp += exp;
    if (runs_.back().exp == 0)
      runs_.pop_back();
    else
      letters_ += std::abs(runs_.back().exp);
    return;
  }
  runs_.push_back({g, exp});
  letters_ += std::abs(exp);
}

bool FreeWord::operator<(const FreeWord& rhs) const {
  if (letters_ != rhs.letters_) return letters_ < rhs.letters_;
  for (size_t i = 0; i < std::min(runs_.size(), rhs.runs_.size()); ++i) {
    if (runs_[i].gen != rhs.runs_[i].gen)
      return runs_[i].gen < rhs.runs_[i].gen;
    if (runs_[i].exp != rhs.runs_[i].exp)
      return runs_[i].exp < rhs.runs_[i].exp;
  }
  return runs_.size() < rhs.runs_.size();
}

FreeWord concat(const FreeWord& a, const FreeWord& b, long long cap) {
  if (a.length() + b.length() > cap) throw WordCapError(a.length() + b.length());
  FreeWord out = a;
  for (const auto& r : b.runs()) out.push(r.gen, r.exp);
  return out;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  const auto& rs = w.runs();
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) out.push(it->gen, -it->exp);
  return out;
}

FreeWord power(const FreeWord& w, long long e, long long cap) {
  if (e == 0 || w.empty()) return {};
  if (e == 1) return w;
  if (e < 0) return power(inverse(w), -e, cap);
  // Peel the conjugating boundary: w = c r c^-1 with r cyclically
  // reduced, then r^e stacks with no cancellation.
  FreeWord c, r = w;
  while (true) {
    const auto& rs = r.runs();
    if (rs.size() < 2) break;
    const auto& f = rs.front();
    const auto& l = rs.back();
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
    long long peel = std::min(std::abs(f.exp), std::abs(l.exp));
    long long sign = f.exp > 0 ? 1 : -1;
    c.push(f.gen, sign * peel);
    FreeWord next;
    next.push(f.gen, f.exp - sign * peel);
    for (size_t i = 1; i + 1 < rs.size(); ++i) next.push(rs[i].gen, rs[i].exp);
    next.push(l.gen, l.exp + sign * peel);
    r = std::move(next);
  }
  if (r.length() > 0 && e > (cap - 2 * c.length()) / r.length())
    throw WordCapError(cap + 1);  // product would overflow the cap
  FreeWord out = c;
  for (long long i = 0; i < e; ++i)
    for (const auto& run : r.runs()) out.push(run.gen, run.exp);
  const FreeWord cinv = inverse(c);
  for (const auto& run : cinv.runs()) out.push(run.gen, run.exp);
  return out;
}

FreeWord conjugate(const FreeWord& g, const FreeWord& w, long long cap) {
  return concat(concat(g, w, cap), inverse(g), cap);
}

FreeWord::Run first_letter(const FreeWord& w) {
  if (w.empty()) throw std::invalid_argument("first_letter: empty word");
  const auto& r = w.runs().front();
  return {r.gen, r.exp > 0 ? 1 : -1};
}

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w,
                    long long cap) {
  FreeWord out;
  for (const auto& run : w.runs()) {
    if (run.gen < 0 || run.gen >= static_cast<int>(images.size()))
      throw std::invalid_argument("substitute: generator out of range");
    const FreeWord& img = images[run.gen];
    if (out.length() + img.length() * std::abs(run.exp) > cap)
      throw WordCapError(out.length() + img.length() * std::abs(run.exp));
    if (run.exp > 0) {
      for (long long i = 0; i < run.exp; ++i)
        for (const auto& r : img.runs()) out.push(r.gen, r.exp);
    } else {
      const auto& rs = img.runs();
      for (long long i = 0; i < -run.exp; ++i)
        for (auto it = rs.rbegin(); it != rs.rend(); ++it)
          out.push(it->gen, -it->exp);
    }
  }
  return out;
}

std::string word_str(const FreeWord& w,
                     const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& run : w.runs()) {
    if (!first) out << " ";
    first = false;
    out << names.at(run.gen) << (run.exp > 0 ? '+' : '-');
    long long e = std::abs(run.exp);
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

FreeWord parse_word(const std::string& text,
                    const std::vector<std::string>& names) {
  FreeWord w;
  if (text == "1") return w;
  std::istringstream in(text);
  std::string tok;
  bool saw_token = false;
  while (in >> tok) {
    saw_token = true;
    long long e = 1;
    auto caret = tok.rfind("^");
    if (caret != std::string::npos && caret + 1 < tok.size() &&
        (std::isdigit(tok[caret + 1]) != 0)) {
      e = std::stoll(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    int sign = tok.back() == '+' ? 1 : -1;
    std::string name = tok.substr(0, tok.size() - 1);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw std::invalid_argument("parse_word: unknown generator '" + name +
                                  "'");
    w.push(static_cast<int>(it - names.begin()), sign * e);
  }
  if (!saw_token)
    throw std::invalid_argument("parse_word: empty text (identity is '1')");
  return w;
}

FreeWord apply_automorphism(const FreeAutomorphism& a, const FreeWord& w,
                            long long cap) {
  return substitute(a.images, w, cap);
}

bool verify_inverse(const FreeAutomorphism& a, long long cap) {
  if (static_cast<int>(a.images.size()) != a.rank ||
      static_cast<int>(a.inverse_images.size()) != a.rank)
    return false;
  for (int g = 0; g < a.rank; ++g) {
    FreeWord gen = FreeWord::generator(g);
    if (substitute(a.images, substitute(a.inverse_images, gen, cap), cap) !=
        gen)
      return false;
    if (substitute(a.inverse_images, substitute(a.images, gen, cap), cap) !=
        gen)
      return false;
  }
  return true;
}

FreeWord act(const SemidirectAction& s, const FreeWord& b, const FreeWord& w,
             long long cap) {
  FreeWord out = w;
  const auto& rs = b.runs();
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) {
    if (it->gen < 0 || it->gen >= s.base_rank)
      throw std::invalid_argument("act: base generator out of range");
    const FreeAutomorphism& phi = s.phi.at(it->gen);
    long long reps = std::abs(it->exp);
    for (long long i = 0; i < reps; ++i) {
      if (it->exp > 0) {
        out = substitute(phi.images, out, cap);
      } else {
        if (phi.inverse_images.empty())
          throw std::invalid_argument("act: inverse images unavailable");
        out = substitute(phi.inverse_images, out, cap);
      }
    }
  }
  return out;
}

SemidirectElement sd_mult(const SemidirectAction& s, const SemidirectElement& a,
                          const SemidirectElement& b, long long cap) {
  SemidirectElement out;
  out.kernel = concat(a.kernel, act(s, a.base, b.kernel, cap), cap);
  out.base = concat(a.base, b.base, cap);
  return out;
}

SemidirectElement sd_inverse(const SemidirectAction& s,
                             const SemidirectElement& a, long long cap) {
  SemidirectElement out;
  out.base = inverse(a.base);
  out.kernel = act(s, out.base, inverse(a.kernel), cap);
  return out;
}

}  // namespace npcx
