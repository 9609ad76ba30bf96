#include "gaussknot/diagram.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <unordered_map>

namespace gaussknot {

namespace {

char kind_char(EndKind k) { return k == EndKind::tail ? 'O' : 'U'; }
char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

void append_token(std::string& out, EndKind kind, int label, Sign sign) {
  out.push_back(kind_char(kind));
  out += std::to_string(label);
  out.push_back(sign_char(sign));
}

}  // namespace

GaussDiagram GaussDiagram::from_chords(std::vector<Chord> chords) {
  const std::size_t n = chords.size();
  std::vector<int> slot(2 * n, -1);
  std::vector<int> ids;
  ids.reserve(n);
  for (const Chord& c : chords) {
    for (int p : {c.tail, c.head}) {
      if (p < 0 || static_cast<std::size_t>(p) >= 2 * n)
        throw std::invalid_argument("chord " + std::to_string(c.id) + ": position " + std::to_string(p) +
                                    " outside 0.." + std::to_string(2 * n - 1));
      if (slot[static_cast<std::size_t>(p)] != -1)
        throw std::invalid_argument("position " + std::to_string(p) + " used twice");
      slot[static_cast<std::size_t>(p)] = 0;
    }
    if (c.sign != Sign::positive && c.sign != Sign::negative)
      throw std::invalid_argument("chord " + std::to_string(c.id) + ": sign must be +1 or -1");
    ids.push_back(c.id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("duplicate chord id");

  std::sort(chords.begin(), chords.end(), [](const Chord& a, const Chord& b) { return a.first() < b.first(); });
  GaussDiagram d;
  for (std::size_t i = 0; i < n; ++i) {
    slot[static_cast<std::size_t>(chords[i].tail)] = static_cast<int>(i);
    slot[static_cast<std::size_t>(chords[i].head)] = static_cast<int>(i);
  }
  d.chords_ = std::move(chords);
  d.slot_ = std::move(slot);
  return d;
}

GaussDiagram GaussDiagram::from_word(std::span<const Letter> word) {
  struct Seen {
    int id;
    int tail = -1;
    int head = -1;
    Sign sign;
  };
  std::unordered_map<int, Seen> seen;
  std::vector<int> order;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Letter& l = word[i];
    auto [it, fresh] = seen.try_emplace(l.label, Seen{static_cast<int>(order.size()) + 1, -1, -1, l.sign});
    if (fresh) order.push_back(l.label);
    Seen& s = it->second;
    if (s.sign != l.sign) throw std::invalid_argument("sign mismatch for chord " + std::to_string(l.label));
    int& slot = l.kind == EndKind::tail ? s.tail : s.head;
    if (slot != -1)
      throw std::invalid_argument("label " + std::to_string(l.label) + " appears twice as " +
                                  (l.kind == EndKind::tail ? "O" : "U"));
    slot = static_cast<int>(i);
  }
  std::vector<Chord> chords;
  chords.reserve(order.size());
  for (int label : order) {
    const Seen& s = seen.at(label);
    if (s.tail == -1 || s.head == -1)
      throw std::invalid_argument("unpaired label " + std::to_string(label) + ": missing " +
                                  (s.tail == -1 ? "O" : "U") + " token");
    chords.push_back(Chord{s.id, s.tail, s.head, s.sign});
  }
  return from_chords(std::move(chords));
}

Endpoint GaussDiagram::endpoint(int position) const {
  const Chord& c = chord_at(position);
  return Endpoint{c.id, c.tail == position ? EndKind::tail : EndKind::head, position};
}

int GaussDiagram::partner(int position) const {
  const Chord& c = chord_at(position);
  return c.tail == position ? c.head : c.tail;
}

int GaussDiagram::index_of(int id) const {
  for (std::size_t i = 0; i < chords_.size(); ++i)
    if (chords_[i].id == id) return static_cast<int>(i);
  throw UnknownChord(id);
}

bool GaussDiagram::has_chord(int id) const {
  return std::any_of(chords_.begin(), chords_.end(), [id](const Chord& c) { return c.id == id; });
}

std::vector<Letter> GaussDiagram::word(int start) const {
  const int m = num_positions();
  std::vector<Letter> w;
  w.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const int p = (start + k) % m;
    const Chord& c = chord_at(p);
    w.push_back(Letter{c.id, c.tail == p ? EndKind::tail : EndKind::head, c.sign});
  }
  return w;
}

GaussDiagram GaussDiagram::relabeled() const {
  GaussDiagram d = *this;
  for (std::size_t i = 0; i < d.chords_.size(); ++i) d.chords_[i].id = static_cast<int>(i) + 1;
  return d;
}

GaussDiagram GaussDiagram::rotated(int start) const {
  if (empty()) return *this;
  const int m = num_positions();
  start = ((start % m) + m) % m;
  std::vector<Chord> chords = chords_;
  for (Chord& c : chords) {
    c.tail = (c.tail - start + m) % m;
    c.head = (c.head - start + m) % m;
  }
  return from_chords(std::move(chords));
}

bool GaussDiagram::operator==(const GaussDiagram& other) const {
  if (chords_.size() != other.chords_.size()) return false;
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    const Chord& a = chords_[i];
    const Chord& b = other.chords_[i];
    if (a.tail != b.tail || a.head != b.head || a.sign != b.sign) return false;
  }
  return true;
}

GaussDiagram parse(std::string_view text) {
  std::vector<Letter> word;
  std::size_t i = 0;
  const std::size_t len = text.size();
  while (i < len) {
    if (!word.empty()) {
      if (text[i] == ' ' || text[i] == ',') {
        ++i;
        if (i == len) throw ParseError("trailing separator", i - 1);
      }
    }
    const std::size_t start = i;
    EndKind kind;
    if (text[i] == 'O') {
      kind = EndKind::tail;
    } else if (text[i] == 'U') {
      kind = EndKind::head;
    } else {
      throw ParseError(std::string("bad token at offset ") + std::to_string(i) + ": expected 'O' or 'U', got '" +
                           text[i] + "'",
                       i);
    }
    ++i;
    if (i == len || text[i] < '1' || text[i] > '9')
      throw ParseError("bad token at offset " + std::to_string(start) + ": expected label after '" +
                           kind_char(kind) + "'",
                       i);
    long long label = 0;
    while (i < len && text[i] >= '0' && text[i] <= '9') {
      label = label * 10 + (text[i] - '0');
      if (label > 1'000'000'000) throw ParseError("label too large at offset " + std::to_string(start), start);
      ++i;
    }
    if (i == len || (text[i] != '+' && text[i] != '-'))
      throw ParseError("bad token at offset " + std::to_string(start) + ": expected sign '+' or '-'", i);
    const Sign sign = text[i] == '+' ? Sign::positive : Sign::negative;
    ++i;
    word.push_back(Letter{static_cast<int>(label), kind, sign});
  }
  try {
    return GaussDiagram::from_word(word);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), len);
  }
}

std::string serialize_word(std::span<const Letter> word) {
  std::string out;
  out.reserve(word.size() * 3);
  std::unordered_map<int, int> relabel;
  for (const Letter& l : word) {
    auto [it, fresh] = relabel.try_emplace(l.label, static_cast<int>(relabel.size()) + 1);
    append_token(out, l.kind, it->second, l.sign);
  }
  return out;
}

std::string serialize(const GaussDiagram& d) {
  std::string out;
  out.reserve(static_cast<std::size_t>(d.num_positions()) * 3);
  // chords() is already in first-appearance order
  for (int p = 0; p < d.num_positions(); ++p) {
    const Chord& c = d.chord_at(p);
    append_token(out, c.tail == p ? EndKind::tail : EndKind::head, d.chord_index_at(p) + 1, c.sign);
  }
  return out;
}

std::string canonical_form(std::span<const Letter> word) {
  const std::size_t m = word.size();
  if (m == 0) return {};
  // Dense labels so relabeling is array-indexed.
  std::unordered_map<int, int> dense;
  std::vector<int> code(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, fresh] = dense.try_emplace(word[i].label, static_cast<int>(dense.size()));
    code[i] = it->second;
  }
  const std::size_t n = dense.size();

  std::string best;
  std::string cur;
  std::vector<int> relabel(n);
  for (std::size_t start = 0; start < m; ++start) {
    // Lexicographic order of serializations: compare token-wise lazily, with
    // labels assigned by first appearance from `start`.
    std::fill(relabel.begin(), relabel.end(), 0);
    int next = 0;
    cur.clear();
    bool worse = false;
    bool better = best.empty();
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t p = (start + k) % m;
      int& lab = relabel[static_cast<std::size_t>(code[p])];
      if (lab == 0) lab = ++next;
      append_token(cur, word[p].kind, lab, word[p].sign);
      if (!better) {
        const std::size_t upto = std::min(cur.size(), best.size());
        const int cmp = cur.compare(0, upto, best, 0, upto);
        if (cmp > 0) {
          worse = true;
          break;
        }
        if (cmp < 0) better = true;
      }
    }
    if (!worse && (better || cur < best)) best = cur;
  }
  return best;
}

std::string canonical_form(const GaussDiagram& d) {
  const std::vector<Letter> w = d.word(0);
  return canonical_form(std::span<const Letter>(w));
}

InterlacementMatrix::InterlacementMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void InterlacementMatrix::set(std::size_t a, std::size_t b, bool v) {
  std::uint64_t& w = rows_[a * words_ + b / 64];
  const std::uint64_t bit = std::uint64_t{1} << (b % 64);
  w = v ? (w | bit) : (w & ~bit);
}

std::size_t InterlacementMatrix::row_weight(std::size_t a) const {
  std::size_t total = 0;
  for (std::size_t k = 0; k < words_; ++k) total += static_cast<std::size_t>(std::popcount(rows_[a * words_ + k]));
  return total;
}

std::size_t InterlacementMatrix::rank() const {
  std::vector<std::uint64_t> m = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < n_ && !(m[pivot * words_ + w] & bit)) ++pivot;
    if (pivot == n_) continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * words_),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words_),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * words_));
    for (std::size_t r = 0; r < n_; ++r) {
      if (r != rank && (m[r * words_ + w] & bit))
        for (std::size_t k = 0; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
    }
    ++rank;
  }
  return rank;
}

bool interlaced(const GaussDiagram& d, std::size_t a, std::size_t b) {
  if (a == b) return false;
  const Chord& ca = d.chords()[a];
  const Chord& cb = d.chords()[b];
  const int lo = ca.first(), hi = ca.second();
  const bool in1 = lo < cb.tail && cb.tail < hi;
  const bool in2 = lo < cb.head && cb.head < hi;
  return in1 != in2;
}

InterlacementMatrix interlacement(const GaussDiagram& d) {
  const std::size_t n = d.size();
  InterlacementMatrix m(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (interlaced(d, a, b)) {
        m.set(a, b, true);
        m.set(b, a, true);
      }
  return m;
}

GaussDiagram delete_chords(const GaussDiagram& d, std::span<const int> ids) {
  std::vector<bool> drop(d.size(), false);
  for (int id : ids) drop[static_cast<std::size_t>(d.index_of(id))] = true;
  std::vector<int> new_pos(static_cast<std::size_t>(d.num_positions()), -1);
  int next = 0;
  for (int p = 0; p < d.num_positions(); ++p)
    if (!drop[static_cast<std::size_t>(d.chord_index_at(p))]) new_pos[static_cast<std::size_t>(p)] = next++;
  std::vector<Chord> kept;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (drop[i]) continue;
    Chord c = d.chords()[i];
    c.tail = new_pos[static_cast<std::size_t>(c.tail)];
    c.head = new_pos[static_cast<std::size_t>(c.head)];
    kept.push_back(c);
  }
  return GaussDiagram::from_chords(std::move(kept));
}

std::vector<CorpusEntry> read_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected name<TAB>code", 0);
    std::string name = line.substr(0, tab);
    try {
      entries.push_back(CorpusEntry{std::move(name), parse(std::string_view(line).substr(tab + 1)), lineno});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return entries;
}

}  // namespace gaussknot
