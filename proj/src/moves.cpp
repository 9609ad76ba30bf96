#include "gaussknot/moves.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "gaussknot/invariants.hpp"
#include "gaussknot/projection.hpp"
#include "gaussknot/surface.hpp"

namespace gaussknot {

namespace {

bool adjacent(int p, int q, int m) { return (p + 1) % m == q || (q + 1) % m == p; }

int next_id(const GaussDiagram& d) {
  int top = 0;
  for (const Chord& c : d.chords()) top = std::max(top, c.id);
  return top + 1;
}

int num_gaps(const GaussDiagram& d) { return std::max(1, d.num_positions()); }

struct R3Roles {
  int tm, tb, mb;  // chord indices
  bool valid;
};

// Classifies the triangle formed by three adjacent pairs.
R3Roles r3_roles(const GaussDiagram& d, const std::array<int, 3>& sites) {
  const int m = d.num_positions();
  std::array<int, 6> used{};
  for (int s = 0; s < 3; ++s) {
    used[static_cast<std::size_t>(2 * s)] = sites[static_cast<std::size_t>(s)];
    used[static_cast<std::size_t>(2 * s + 1)] = (sites[static_cast<std::size_t>(s)] + 1) % m;
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return {0, 0, 0, false};
  int top = -1, middle = -1, bottom = -1;
  for (int s = 0; s < 3; ++s) {
    const int p = sites[static_cast<std::size_t>(s)];
    const int q = (p + 1) % m;
    const int tails = (d.chord_at(p).tail == p) + (d.chord_at(q).tail == q);
    int& role = tails == 2 ? top : tails == 0 ? bottom : middle;
    if (role != -1) return {0, 0, 0, false};
    role = p;
  }
  const int mid2 = (middle + 1) % m;
  const bool head_first = d.chord_at(middle).head == middle;
  const int tm = d.chord_index_at(head_first ? middle : mid2);
  const int mb = d.chord_index_at(head_first ? mid2 : middle);
  if (tm == mb) return {0, 0, 0, false};
  int tb = -1;
  for (int p : {top, (top + 1) % m})
    if (d.chord_index_at(p) != tm) tb = d.chord_index_at(p);
  // tb must join top and bottom; tm's tail must sit on top, mb's head on bottom.
  const auto on = [&](int site, int idx) {
    return d.chord_index_at(site) == idx || d.chord_index_at((site + 1) % m) == idx;
  };
  if (tb < 0 || tb == tm || tb == mb || !on(top, tm) || !on(bottom, tb) || !on(bottom, mb))
    return {0, 0, 0, false};

  const auto& ch = d.chords();
  const int o_top = d.chord_index_at(top) == tm ? 0 : 1;
  const int o_mid = head_first ? 0 : 1;
  const int o_bot = d.chord_index_at(bottom) == tb ? 0 : 1;
  const int s_tm = to_int(ch[static_cast<std::size_t>(tm)].sign);
  const int s_tb = to_int(ch[static_cast<std::size_t>(tb)].sign);
  const int s_mb = to_int(ch[static_cast<std::size_t>(mb)].sign);
  const bool ok = s_tm * s_tb == ((o_mid ^ o_bot) ? -1 : 1) && s_tb * s_mb == ((o_top ^ o_mid) ? -1 : 1);
  return {tm, tb, mb, ok};
}

void add_r3_moves(const GaussDiagram& d, std::vector<Move>& out) {
  const int m = d.num_positions();
  if (d.size() < 3) return;
  std::vector<std::array<int, 3>> seen;
  // site start position holding endpoint p and its neighbor on `side`
  const auto site_of = [m](int p, int side) { return side < 0 ? (p - 1 + m) % m : p; };
  for (const Chord& a : d.chords()) {
    for (int sa : {-1, 1}) {
      const int nb = (a.tail + sa + m) % m;
      const Chord& b = d.chord_at(nb);
      if (b.id == a.id) continue;
      for (int sc : {-1, 1}) {
        const int nc = (a.head + sc + m) % m;
        const Chord& c = d.chord_at(nc);
        if (c.id == a.id || c.id == b.id) continue;
        const int b_other = b.tail == nb ? b.head : b.tail;
        const int c_other = c.tail == nc ? c.head : c.tail;
        if (!adjacent(b_other, c_other, m)) continue;
        std::array<int, 3> sites{site_of(a.tail, sa), site_of(a.head, sc),
                                 (b_other + 1) % m == c_other ? b_other : c_other};
        std::sort(sites.begin(), sites.end());
        if (std::find(seen.begin(), seen.end(), sites) != seen.end()) continue;
        seen.push_back(sites);
        if (!r3_roles(d, sites).valid) continue;
        Move mv{MoveKind::r3};
        std::array<int, 3> ids{a.id, b.id, c.id};
        std::sort(ids.begin(), ids.end());
        mv.chords = ids;
        mv.sites = sites;
        out.push_back(mv);
      }
    }
  }
}

std::vector<Letter> apply_word(const GaussDiagram& d, const Move& mv) {
  const int m = d.num_positions();
  std::vector<Letter> w = d.word(0);
  const auto check_gap = [&](int g) {
    if (g < 0 || g >= num_gaps(d)) throw std::invalid_argument("insertion gap out of range");
  };
  switch (mv.kind) {
    case MoveKind::r1_insert: {
      check_gap(mv.gaps[0]);
      const int id = next_id(d);
      const EndKind first = mv.tail_first ? EndKind::tail : EndKind::head;
      const EndKind second = mv.tail_first ? EndKind::head : EndKind::tail;
      const std::array<Letter, 2> ins{Letter{id, first, mv.sign}, Letter{id, second, mv.sign}};
      w.insert(w.begin() + mv.gaps[0], ins.begin(), ins.end());
      return w;
    }
    case MoveKind::r1_delete: {
      const Chord& c = d.chord(mv.chords[0]);
      if (!adjacent(c.tail, c.head, m)) throw std::invalid_argument("R1 deletion: chord endpoints not adjacent");
      std::erase_if(w, [&](const Letter& l) { return l.label == c.id; });
      return w;
    }
    case MoveKind::r2_insert: {
      check_gap(mv.gaps[0]);
      check_gap(mv.gaps[1]);
      if (mv.gaps[0] > mv.gaps[1]) throw std::invalid_argument("R2 insertion gaps must be ordered");
      const int x = next_id(d);
      const int y = x + 1;
      const Sign sx = mv.sign;
      const Sign sy = flip(mv.sign);
      const EndKind k1 = mv.tail_first ? EndKind::tail : EndKind::head;
      const EndKind k2 = mv.tail_first ? EndKind::head : EndKind::tail;
      const std::array<Letter, 2> first{Letter{x, k1, sx}, Letter{y, k1, sy}};
      const std::array<Letter, 2> second = mv.parallel ? std::array<Letter, 2>{Letter{x, k2, sx}, Letter{y, k2, sy}}
                                                       : std::array<Letter, 2>{Letter{y, k2, sy}, Letter{x, k2, sx}};
      w.insert(w.begin() + mv.gaps[1], second.begin(), second.end());
      w.insert(w.begin() + mv.gaps[0], first.begin(), first.end());
      return w;
    }
    case MoveKind::r2_delete: {
      const Chord& a = d.chord(mv.chords[0]);
      const Chord& b = d.chord(mv.chords[1]);
      if (a.id == b.id || a.sign == b.sign || !adjacent(a.tail, b.tail, m) || !adjacent(a.head, b.head, m))
        throw std::invalid_argument("R2 deletion: chords do not form a bigon");
      std::erase_if(w, [&](const Letter& l) { return l.label == a.id || l.label == b.id; });
      return w;
    }
    case MoveKind::r3: {
      for (int s : mv.sites)
        if (s < 0 || s >= m) throw std::invalid_argument("R3 site out of range");
      if (!r3_roles(d, mv.sites).valid) throw std::invalid_argument("R3: not a valid triangle");
      for (int s : mv.sites) std::swap(w[static_cast<std::size_t>(s)], w[static_cast<std::size_t>((s + 1) % m)]);
      return w;
    }
  }
  throw std::invalid_argument("unknown move kind");
}

}  // namespace

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::r1_insert: return "R1+";
    case MoveKind::r1_delete: return "R1-";
    case MoveKind::r2_insert: return "R2+";
    case MoveKind::r2_delete: return "R2-";
    case MoveKind::r3: return "R3";
  }
  return "?";
}

std::vector<Move> enumerate_moves(const GaussDiagram& d, std::size_t max_chords) {
  std::vector<Move> out;
  const int m = d.num_positions();
  const int gaps = num_gaps(d);
  const auto& ch = d.chords();

  for (const Chord& c : ch)
    if (adjacent(c.tail, c.head, m)) {
      Move mv{MoveKind::r1_delete};
      mv.chords[0] = c.id;
      out.push_back(mv);
    }
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = i + 1; j < ch.size(); ++j)
      if (ch[i].sign != ch[j].sign && adjacent(ch[i].tail, ch[j].tail, m) && adjacent(ch[i].head, ch[j].head, m)) {
        Move mv{MoveKind::r2_delete};
        mv.chords[0] = ch[i].id;
        mv.chords[1] = ch[j].id;
        out.push_back(mv);
      }
  add_r3_moves(d, out);

  if (d.size() + 1 <= max_chords)
    for (int g = 0; g < gaps; ++g)
      for (bool tail_first : {true, false})
        for (Sign s : {Sign::positive, Sign::negative}) {
          Move mv{MoveKind::r1_insert};
          mv.gaps = {g, g};
          mv.tail_first = tail_first;
          mv.sign = s;
          out.push_back(mv);
        }
  if (d.size() + 2 <= max_chords)
    for (int g1 = 0; g1 < gaps; ++g1)
      for (int g2 = g1; g2 < gaps; ++g2)
        for (bool tail_first : {true, false})
          for (bool parallel : {true, false})
            for (Sign s : {Sign::positive, Sign::negative}) {
              Move mv{MoveKind::r2_insert};
              mv.gaps = {g1, g2};
              mv.tail_first = tail_first;
              mv.parallel = parallel;
              mv.sign = s;
              out.push_back(mv);
            }
  return out;
}

GaussDiagram apply(const GaussDiagram& d, const Move& m) {
  const std::vector<Letter> w = apply_word(d, m);
  // from_word renumbers; restore stable ids for surviving chords
  GaussDiagram fresh = GaussDiagram::from_word(w);
  std::vector<Chord> chords = fresh.chords();
  for (Chord& c : chords) c.id = w[static_cast<std::size_t>(c.first())].label;
  return GaussDiagram::from_chords(std::move(chords));
}

std::vector<std::string> neighbor_forms(const GaussDiagram& d, std::size_t max_chords) {
  std::vector<std::string> forms;
  for (const Move& mv : enumerate_moves(d, max_chords)) {
    const std::vector<Letter> w = apply_word(d, mv);
    forms.push_back(canonical_form(std::span<const Letter>(w)));
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

std::vector<GaussDiagram> neighbors(const GaussDiagram& d, std::size_t max_chords) {
  std::vector<GaussDiagram> out;
  for (const std::string& f : neighbor_forms(d, max_chords)) out.push_back(parse(f));
  return out;
}

int odd_writhe(const GaussDiagram& d) {
  int total = 0;
  for (const auto& [id, parity] : gaussian_parity(d))
    if (parity == Parity::odd) total += to_int(d.chord(id).sign);
  return total;
}

namespace {

// Expands one BFS level; results are per frontier index, so the merge order
// does not depend on scheduling.
std::vector<std::vector<std::string>> expand(const std::vector<GaussDiagram>& frontier, std::size_t max_chords,
                                             unsigned threads) {
  std::vector<std::vector<std::string>> out(frontier.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, (frontier.size() + 31) / 32));
  if (threads <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i) out[i] = neighbor_forms(frontier[i], max_chords);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < frontier.size();)
        out[i] = neighbor_forms(frontier[i], max_chords);
    });
  pool.clear();
  return out;
}

template <class OnNew>
bool bfs(const GaussDiagram& start, const OrbitOptions& opts, OnNew&& on_new) {
  std::unordered_set<std::string> visited;
  const std::string root = canonical_form(start);
  visited.insert(root);
  std::vector<GaussDiagram> frontier{parse(root)};
  if (!on_new(frontier.front(), root, 0)) return false;
  for (int level = 1; level <= opts.depth && !frontier.empty(); ++level) {
    const auto expanded = expand(frontier, opts.max_chords, opts.threads);
    std::vector<GaussDiagram> next;
    for (const auto& forms : expanded)
      for (const std::string& f : forms) {
        if (visited.contains(f)) continue;
        if (visited.size() >= opts.max_visited) return true;
        visited.insert(f);
        next.push_back(parse(f));
        if (!on_new(next.back(), f, level)) return false;
      }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

OrbitReport orbit(const GaussDiagram& d, const OrbitOptions& opts, const OrbitVisitor& visit) {
  if (opts.depth < 0) throw std::invalid_argument("orbit depth must be nonnegative");
  OrbitReport r;
  r.start = canonical_form(d);
  r.depth = opts.depth;
  r.min_genus = surface_genus(d);
  r.min_bridges = bridge_count(d);
  r.frontier_truncated = bfs(d, opts, [&](const GaussDiagram& e, const std::string& form, int level) {
    ++r.visited;
    r.min_genus = std::min(r.min_genus, surface_genus(e));
    r.min_bridges = std::min(r.min_bridges, bridge_count(e));
    if (form.empty()) r.reached_empty = true;
    if (visit) visit(e, form, level);
    return true;
  });
  return r;
}

std::optional<int> connect(const GaussDiagram& from, const GaussDiagram& to, const OrbitOptions& opts) {
  const std::string target = canonical_form(to);
  std::optional<int> found;
  bfs(from, opts, [&](const GaussDiagram&, const std::string& form, int level) {
    if (form == target) {
      found = level;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace gaussknot
