#include "psurg/knot.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "psurg/errors.hpp"

namespace psurg {

void Word::append_power(int generator, long exponent) {
  const int l = letter(generator, exponent >= 0 ? 1 : -1);
  for (long i = 0; i < std::labs(exponent); ++i) letters_.push_back(l);
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int l : letters_) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

long Word::exponent_sum(std::span<const long> images) const {
  long s = 0;
  for (int l : letters_) {
    const long v = images[static_cast<std::size_t>(generator_of(l))];
    s += l > 0 ? v : -v;
  }
  return s;
}

int Word::max_generator() const {
  int m = -1;
  for (int l : letters_) m = std::max(m, generator_of(l));
  return m;
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i];
  }
  return os.str();
}

std::string KnotPresentation::hash() const {
  std::ostringstream os;
  os << n_generators << ';';
  for (const auto& r : relators) os << r.to_string() << '|';
  os << ';' << meridian.to_string() << ';' << longitude.to_string();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : os.str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << h;
  return hex.str();
}

bool KnotPresentation::abelianization_consistent() const {
  if (abelianization.size() != static_cast<std::size_t>(n_generators)) return false;
  for (const auto& r : relators) {
    if (r.exponent_sum(abelianization) != 0) return false;
  }
  return meridian.exponent_sum(abelianization) == 1 &&
         longitude.exponent_sum(abelianization) == 0;
}

namespace {

// Wirtinger relation at a crossing of sign eps with over-generator k:
// x_out = x_k^{-eps} x_in x_k^{eps}.
Word wirtinger_relator(int in, int out, int over, int eps) {
  Word w;
  w.append(Word::letter(over, -eps));
  w.append(Word::letter(in));
  w.append(Word::letter(over, eps));
  w.append(Word::letter(out, -1));
  return w;
}

struct Slot {
  int crossing;
  int pos;
};

int count_components(const PDCode& pd,
                     const std::map<int, std::vector<Slot>>& slots_of) {
  const int n = static_cast<int>(pd.size()) * 4;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      a = parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
    unite(4 * c + 0, 4 * c + 2);
    unite(4 * c + 1, 4 * c + 3);
  }
  for (const auto& [label, slots] : slots_of) {
    unite(4 * slots[0].crossing + slots[0].pos, 4 * slots[1].crossing + slots[1].pos);
  }
  int comps = 0;
  for (int i = 0; i < n; ++i) comps += find(i) == i;
  return comps;
}

}  // namespace

KnotPresentation unknot_presentation() {
  KnotPresentation k;
  k.name = "unknot";
  return k;
}

KnotPresentation presentation_from_pd(const PDCode& pd, std::string name) {
  if (pd.empty()) {
    auto k = unknot_presentation();
    k.name = std::move(name);
    return k;
  }
  std::map<int, std::vector<Slot>> slots_of;
  for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
    for (int pos = 0; pos < 4; ++pos) {
      slots_of[pd[static_cast<std::size_t>(c)][static_cast<std::size_t>(pos)]].push_back({c, pos});
    }
  }
  for (const auto& [label, slots] : slots_of) {
    if (slots.size() != 2) {
      throw InconsistentPD("PD edge label " + std::to_string(label) + " occurs " +
                           std::to_string(slots.size()) + " times, expected 2");
    }
  }
  const int components = count_components(pd, slots_of);
  if (components != 1) throw MultiComponentLink(components);

  const int n = static_cast<int>(pd.size());
  auto label_at = [&](Slot s) {
    return pd[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(s.pos)];
  };
  auto other_slot = [&](Slot s) {
    const auto& both = slots_of.at(label_at(s));
    const bool first = both[0].crossing == s.crossing && both[0].pos == s.pos;
    return first ? both[1] : both[0];
  };

  // Walk the knot from the incoming under-strand of crossing 0. Arc t starts
  // right after the t-th under-passage.
  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  std::vector<int> over_arc(static_cast<std::size_t>(n), -1);
  std::vector<int> under_order;  // crossings in order of under-passage
  std::vector<int> under_seen(static_cast<std::size_t>(n), 0);
  std::vector<int> over_seen(static_cast<std::size_t>(n), 0);
  int arc = -1;
  Slot s{0, 0};
  for (int step = 0; step < 2 * n; ++step) {
    const auto c = static_cast<std::size_t>(s.crossing);
    if (s.pos == 2) {
      throw InconsistentPD("strand orientation enters crossing " +
                           std::to_string(s.crossing + 1) +
                           " through its outgoing under-edge");
    }
    if (s.pos == 0) {
      ++under_seen[c];
      under_order.push_back(s.crossing);
      ++arc;
    } else {
      ++over_seen[c];
      // Over-strand running from position 3 to position 1 is a positive crossing.
      sign[c] = s.pos == 3 ? 1 : -1;
      over_arc[c] = arc;
    }
    const Slot exit{s.crossing, (s.pos + 2) % 4};
    s = other_slot(exit);
  }
  if (s.crossing != 0 || s.pos != 0) {
    throw InconsistentPD("traversal did not close up");
  }
  for (int c = 0; c < n; ++c) {
    if (under_seen[static_cast<std::size_t>(c)] != 1 ||
        over_seen[static_cast<std::size_t>(c)] != 1) {
      throw InconsistentPD("crossing " + std::to_string(c + 1) +
                           " is not traversed once over and once under");
    }
  }
  KnotPresentation k;
  k.name = std::move(name);
  k.n_generators = n;
  k.conjugate_generators = true;
  k.abelianization.assign(static_cast<std::size_t>(n), 1);
  k.meridian = Word{Word::letter(0)};
  long writhe = 0;
  for (int t = 0; t < n; ++t) {
    const int c = under_order[static_cast<std::size_t>(t)];
    const int in = (t + n - 1) % n;
    const int out = t;
    const int eps = sign[static_cast<std::size_t>(c)];
    writhe += eps;
    if (t > 0) {
      k.relators.push_back(wirtinger_relator(in, out, over_arc[static_cast<std::size_t>(c)], eps));
    }
  }
  // The relator of the first under-passage is the dropped one.
  // Longitude from the start of arc 0: pass under each crossing in turn.
  Word lon;
  for (int t = 1; t <= n; ++t) {
    const int c = under_order[static_cast<std::size_t>(t % n)];
    lon.append(Word::letter(over_arc[static_cast<std::size_t>(c)], sign[static_cast<std::size_t>(c)]));
  }
  lon.append_power(0, -writhe);
  k.longitude = lon.reduced();
  k.writhe = writhe;
  return k;
}

namespace {

std::vector<int> parse_braid_letters(std::string_view text) {
  std::vector<int> letters;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::string t = token;
    token.clear();
    int sign = 1;
    std::size_t i = 0;
    if (t[i] == '-' || t[i] == '+') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i < t.size() && (t[i] == 's' || t[i] == 'S')) {
      if (t[i] == 'S') sign = -sign;
      ++i;
    }
    if (i >= t.size()) throw ParseError("braid letter '" + t + "' has no index");
    for (std::size_t j = i; j < t.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
        throw ParseError("unexpected character in braid letter '" + t + "'");
      }
    }
    const int v = std::atoi(t.c_str() + i);
    if (v <= 0) throw ParseError("braid generator indices start at 1");
    letters.push_back(sign * v);
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return letters;
}

}  // namespace

int braid_components(std::span<const int> letters) {
  int strands = 1;
  for (int l : letters) strands = std::max(strands, std::abs(l) + 1);
  // perm[pos] = strand currently at position pos.
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

PDCode braid_to_pd(std::span<const int> letters) {
  int strands = 1;
  for (int l : letters) strands = std::max(strands, std::abs(l) + 1);
  std::vector<int> current(static_cast<std::size_t>(strands));
  std::iota(current.begin(), current.end(), 0);
  int next_label = strands;
  PDCode pd;
  // Strands run upward, positions left to right. Positive sigma_i: the strand
  // from position i passes over to position i+1.
  for (int l : letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    const int a = current[i];      // bottom-left
    const int b = current[i + 1];  // bottom-right
    const int left = next_label++;
    const int right = next_label++;
    if (l > 0) {
      pd.push_back({b, right, left, a});
    } else {
      pd.push_back({a, b, right, left});
    }
    current[i] = left;
    current[i + 1] = right;
  }
  // Close the braid: the top edge at each position is the bottom edge there.
  std::map<int, int> close;
  for (int pos = 0; pos < strands; ++pos) close[current[static_cast<std::size_t>(pos)]] = pos;
  for (auto& x : pd) {
    for (int& e : x) {
      auto it = close.find(e);
      if (it != close.end()) e = it->second;
    }
  }
  // Relabel 1..2n in order of first appearance.
  std::map<int, int> relabel;
  for (auto& x : pd) {
    for (int& e : x) {
      auto [it, inserted] = relabel.emplace(e, static_cast<int>(relabel.size()) + 1);
      e = it->second;
    }
  }
  return pd;
}

KnotPresentation parse_braid(std::string_view text) {
  const auto letters = parse_braid_letters(text);
  const int comps = braid_components(letters);
  if (comps != 1) throw MultiComponentLink(comps);
  std::string name = "braid[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) name += ' ';
    name += std::to_string(letters[i]);
  }
  name += ']';
  return presentation_from_pd(braid_to_pd(letters), name);
}

KnotPresentation parse_pd(std::string_view text) {
  std::string s(text);
  // Strip a leading "PD" and the outer brackets.
  const std::regex outer(R"(^\s*(?:PD)?\s*[\[\(]\s*(.*?)\s*[\]\)]\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, outer)) throw ParseError("expected PD[...]");
  const std::string body = m[1].str();
  const std::regex tuple(
      R"((?:X\s*)?[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  PDCode pd;
  std::string rest;
  auto it = std::sregex_iterator(body.begin(), body.end(), tuple);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& t = *it;
    rest += body.substr(last, static_cast<std::size_t>(t.position()) - last);
    last = static_cast<std::size_t>(t.position() + t.length());
    pd.push_back({std::stoi(t[1]), std::stoi(t[2]), std::stoi(t[3]), std::stoi(t[4])});
  }
  rest += body.substr(last);
  for (char ch : rest) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') {
      throw ParseError("unexpected text in PD code near '" + rest + "'");
    }
  }
  return presentation_from_pd(pd, "PD[" + std::to_string(pd.size()) + " crossings]");
}

KnotPresentation torus_knot_presentation(long p, long q) {
  if (std::labs(p) < 2 || std::labs(q) < 2) {
    throw InvalidArgument("torus knot parameters need |p|, |q| >= 2");
  }
  if (std::gcd(p, q) != 1) {
    throw NotCoprime("T(" + std::to_string(p) + "," + std::to_string(q) +
                     ") is not a knot: parameters share a factor");
  }
  if ((p < 0) != (q < 0)) {
    auto k = mirror(torus_knot_presentation(std::labs(p), std::labs(q)));
    k.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return k;
  }
  p = std::labs(p);
  q = std::labs(q);
  // Extended Euclid for u q + v p = 1.
  long old_r = q, r = p, old_u = 1, u = 0, old_v = 0, v = 1;
  while (r != 0) {
    const long quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_u, u) = std::make_pair(u, old_u - quot * u);
    std::tie(old_v, v) = std::make_pair(v, old_v - quot * v);
  }
  KnotPresentation k;
  k.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  k.n_generators = 2;
  k.conjugate_generators = false;
  k.abelianization = {q, p};
  Word rel;
  rel.append_power(0, p);
  rel.append_power(1, -q);
  k.relators = {rel};
  Word m;
  m.append_power(0, old_u);
  m.append_power(1, old_v);
  k.meridian = m;
  Word lon;
  lon.append_power(0, p);
  for (long i = 0; i < p * q; ++i) lon *= m.inverse();
  k.longitude = lon.reduced();
  k.writhe = (std::min(p, q) - 1) * std::max(p, q);
  return k;
}

KnotPresentation mirror(const KnotPresentation& k) {
  auto negate = [](const Word& w) {
    std::vector<int> out = w.letters();
    for (int& l : out) l = -l;
    return Word(std::move(out));
  };
  KnotPresentation out = k;
  for (auto& r : out.relators) r = negate(r);
  out.meridian = Word(std::vector<int>(k.meridian.letters().rbegin(),
                                       k.meridian.letters().rend()));
  out.longitude = negate(k.longitude);
  out.writhe = -k.writhe;
  const std::string prefix = "mirror of ";
  if (k.name.rfind(prefix, 0) == 0) {
    out.name = k.name.substr(prefix.size());
  } else {
    out.name = prefix + k.name;
  }
  return out;
}

namespace {

Word substitute(const Word& w, int gen, const Word& value) {
  Word out;
  for (int l : w.letters()) {
    if (Word::generator_of(l) == gen) {
      out *= l > 0 ? value : value.inverse();
    } else {
      out.append(l);
    }
  }
  return out.reduced();
}

Word renumber(const Word& w, int removed) {
  std::vector<int> out = w.letters();
  for (int& l : out) {
    const int g = Word::generator_of(l);
    if (g > removed) l = l > 0 ? l - 1 : l + 1;
  }
  return Word(std::move(out));
}

}  // namespace

KnotPresentation simplify(const KnotPresentation& k) {
  KnotPresentation out = k;
  const int keep = out.meridian.size() == 1 ? Word::generator_of(out.meridian.letters()[0]) : -1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ri = 0; ri < out.relators.size() && !changed; ++ri) {
      const auto& rel = out.relators[ri].letters();
      for (std::size_t pos = 0; pos < rel.size(); ++pos) {
        const int g = Word::generator_of(rel[pos]);
        if (g == keep) continue;
        const auto occurrences = std::count_if(rel.begin(), rel.end(), [&](int l) {
          return Word::generator_of(l) == g;
        });
        if (occurrences != 1) continue;
        // rel = A x^e B = 1  =>  x = (B A)^{-e}
        Word a(std::vector<int>(rel.begin(), rel.begin() + static_cast<long>(pos)));
        Word b(std::vector<int>(rel.begin() + static_cast<long>(pos) + 1, rel.end()));
        Word value = b * a;
        if (rel[pos] > 0) value = value.inverse();
        value = value.reduced();
        std::vector<Word> rels;
        for (std::size_t rj = 0; rj < out.relators.size(); ++rj) {
          if (rj == ri) continue;
          auto r = renumber(substitute(out.relators[rj], g, value), g);
          if (!r.empty()) rels.push_back(r);
        }
        out.relators = std::move(rels);
        out.meridian = renumber(substitute(out.meridian, g, value), g);
        out.longitude = renumber(substitute(out.longitude, g, value), g);
        out.abelianization.erase(out.abelianization.begin() + g);
        --out.n_generators;
        changed = true;
        break;
      }
    }
  }
  return out;
}

SU2Element evaluate_word(const Word& word, std::span<const SU2Element> assignment) {
  SU2Element acc;
  for (int l : word.letters()) {
    const int g = Word::generator_of(l);
    if (g < 0 || static_cast<std::size_t>(g) >= assignment.size()) {
      throw IndexOutOfRange("word letter " + std::to_string(l) +
                            " refers to a generator outside the assignment");
    }
    const auto& u = assignment[static_cast<std::size_t>(g)];
    acc = acc * (l > 0 ? u : u.inverse());
  }
  return acc;
}

KnotPresentation named_knot(std::string_view name) {
  const std::string n(name);
  if (n == "unknot" || n == "0_1") return unknot_presentation();
  if (n == "trefoil" || n == "3_1" || n == "right-trefoil") {
    auto k = parse_braid("1 1 1");
    k.name = "trefoil";
    return k;
  }
  if (n == "left-trefoil") {
    auto k = parse_braid("-1 -1 -1");
    k.name = "left-trefoil";
    return k;
  }
  if (n == "figure-eight" || n == "figure8" || n == "4_1") {
    auto k = parse_braid("1 -2 1 -2");
    k.name = "figure-eight";
    return k;
  }
  if (n == "5_1" || n == "cinquefoil") {
    auto k = parse_braid("1 1 1 1 1");
    k.name = "T(2,5)";
    return k;
  }
  std::smatch m;
  if (std::regex_match(n, m, std::regex(R"(T\((-?\d+),(-?\d+)\))"))) {
    return torus_knot_presentation(std::stol(m[1]), std::stol(m[2]));
  }
  throw ParseError("unknown knot name '" + n + "'");
}

}  // namespace psurg
