#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaussknot {

/// Sign of a crossing. Stored once per chord.
enum class Sign : std::int8_t { negative = -1, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

/// Tail = over-pass end ("O" token), head = under-pass end ("U" token).
enum class EndKind : std::uint8_t { tail, head };

/// One letter of a Gauss word: the endpoint of chord `label` of the given kind.
struct Letter {
  int label;
  EndKind kind;
  Sign sign;

  bool operator==(const Letter&) const = default;
};

struct Chord {
  int id;
  int tail;  // position of the over-pass end
  int head;  // position of the under-pass end
  Sign sign;

  int first() const { return tail < head ? tail : head; }
  int second() const { return tail < head ? head : tail; }
};

struct Endpoint {
  int chord_id;
  EndKind kind;
  int position;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  /// Byte offset into the input where the problem was detected.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownChord : public std::out_of_range {
 public:
  explicit UnknownChord(int id)
      : std::out_of_range("unknown chord id " + std::to_string(id)), id_(id) {}
  int id() const { return id_; }

 private:
  int id_;
};

/// A Gauss diagram: 2n chord endpoints in cyclic order on the core circle.
///
/// Chords are kept sorted by the position of their first endpoint, so two
/// diagrams compare equal iff they have the same endpoint sequence, whatever
/// their chord ids are. Ids are stable labels: deleting chords does not
/// renumber the survivors.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Builds a diagram from explicit chords. Throws std::invalid_argument when
  /// positions do not fill 0..2n-1 exactly or ids repeat.
  static GaussDiagram from_chords(std::vector<Chord> chords);

  /// Builds a diagram from a cyclic word starting at position 0. Each label
  /// must occur once as tail and once as head with the same sign; chord ids
  /// are renumbered 1..n by first appearance.
  static GaussDiagram from_word(std::span<const Letter> word);

  std::size_t size() const { return chords_.size(); }
  bool empty() const { return chords_.empty(); }
  int num_positions() const { return static_cast<int>(slot_.size()); }

  /// Chords in order of first appearance.
  const std::vector<Chord>& chords() const { return chords_; }

  /// Index into chords() of the chord owning `position`.
  int chord_index_at(int position) const { return slot_[static_cast<std::size_t>(position)]; }
  const Chord& chord_at(int position) const { return chords_[static_cast<std::size_t>(chord_index_at(position))]; }
  Endpoint endpoint(int position) const;
  /// Position of the other endpoint of the chord at `position`.
  int partner(int position) const;

  /// Index into chords() of the chord with this id; throws UnknownChord.
  int index_of(int id) const;
  const Chord& chord(int id) const { return chords_[static_cast<std::size_t>(index_of(id))]; }
  bool has_chord(int id) const;

  /// Word starting at position `start`, with ids as labels.
  std::vector<Letter> word(int start = 0) const;

  /// Same diagram with ids renumbered 1..n by first appearance.
  GaussDiagram relabeled() const;

  /// Diagram whose position 0 is this diagram's position `start`.
  GaussDiagram rotated(int start) const;

  /// Structural equality; chord ids are ignored.
  bool operator==(const GaussDiagram& other) const;

 private:
  std::vector<Chord> chords_;
  std::vector<int> slot_;
};

/// Parses a Gauss code: item* with item := ("O"|"U") nat sign. A single
/// space or comma may separate items.
GaussDiagram parse(std::string_view text);

/// Serializes starting at position 0, labels by first appearance.
std::string serialize(const GaussDiagram& d);

/// Serialization of a word with labels renumbered by first appearance.
std::string serialize_word(std::span<const Letter> word);

/// Lexicographically least serialization over all rotations of the circle.
std::string canonical_form(const GaussDiagram& d);

/// Canonical form of a raw word; skips building a GaussDiagram. The word must
/// be valid.
std::string canonical_form(std::span<const Letter> word);

/// Symmetric 0/1 matrix over GF(2), rows packed into 64-bit words.
class InterlacementMatrix {
 public:
  explicit InterlacementMatrix(std::size_t n = 0);

  std::size_t size() const { return n_; }
  bool get(std::size_t a, std::size_t b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  void set(std::size_t a, std::size_t b, bool v);
  /// Number of ones in row a.
  std::size_t row_weight(std::size_t a) const;
  /// Rank over GF(2).
  std::size_t rank() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Rows and columns are indexed like d.chords().
InterlacementMatrix interlacement(const GaussDiagram& d);

/// True iff chords with indices a and b (into d.chords()) interlace.
bool interlaced(const GaussDiagram& d, std::size_t a, std::size_t b);

/// Removes the chords with the given ids; survivors keep their ids and cyclic
/// order. Throws UnknownChord.
GaussDiagram delete_chords(const GaussDiagram& d, std::span<const int> ids);

struct CorpusEntry {
  std::string name;
  GaussDiagram diagram;
  std::size_t line;
};

/// Reads `name<TAB>code` lines; `#` lines and blank lines are skipped. Parse
/// errors are rethrown as ParseError naming the line.
std::vector<CorpusEntry> read_corpus(std::istream& in);

}  // namespace gaussknot
