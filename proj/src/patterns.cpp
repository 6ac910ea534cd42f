#include "thetapcn/patterns.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace thetapcn {

namespace {

bool digits_only(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '1' && c <= '9'; });
}

}  // namespace

PatternTemplate PatternTemplate::parse(const std::string& text) {
  PatternTemplate t;
  const auto open = text.find('(');
  if (open == std::string::npos) {
    t.prefix = text;
    if (t.prefix.empty() || !digits_only(t.prefix))
      throw CertificateError("bad pattern text: " + text);
    return t;
  }
  const auto close = text.find(')', open);
  if (close == std::string::npos || close == open + 1 ||
      close + 1 == text.size())
    throw CertificateError("bad pattern text: " + text);
  t.prefix = text.substr(0, open);
  t.block = text.substr(open + 1, close - open - 1);
  const char m = text[close + 1];
  if (m == '*')
    t.mult = Multiplicity::kStar;
  else if (m == '+')
    t.mult = Multiplicity::kPlus;
  else
    throw CertificateError("bad pattern text: " + text);
  t.suffix = text.substr(close + 2);
  if (!digits_only(t.block) || !digits_only(t.prefix) ||
      !digits_only(t.suffix))
    throw CertificateError("bad pattern text: " + text);
  return t;
}

std::string PatternTemplate::str() const {
  if (mult == Multiplicity::kNone) return prefix;
  return prefix + "(" + block + ")" +
         (mult == Multiplicity::kStar ? "*" : "+") + suffix;
}

int PatternTemplate::min_letters() const {
  int base = static_cast<int>(prefix.size() + suffix.size());
  if (mult == Multiplicity::kPlus) base += static_cast<int>(block.size());
  return base;
}

bool PatternTemplate::can_expand(int letters) const {
  const int base = static_cast<int>(prefix.size() + suffix.size());
  if (mult == Multiplicity::kNone) return letters == base;
  if (letters < min_letters()) return false;
  return (letters - base) % static_cast<int>(block.size()) == 0;
}

std::string PatternTemplate::expand(int letters) const {
  if (!can_expand(letters))
    throw CertificateError("pattern " + str() + " has no expansion with " +
                           std::to_string(letters) + " letters");
  std::string out = prefix;
  if (mult != Multiplicity::kNone) {
    const int reps = (letters - static_cast<int>(prefix.size() + suffix.size())) /
                     static_cast<int>(block.size());
    for (int r = 0; r < reps; ++r) out += block;
  }
  out += suffix;
  return out;
}

namespace {

// Packing validity of a color word along a standalone path or cycle: equal
// letters c must sit more than c apart.
bool word_valid(const std::string& w, WordContext ctx) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[i] != w[j]) continue;
      int d = j - i;
      if (ctx == WordContext::kCycle) d = std::min(d, n - d);
      if (d <= w[i] - '0') return false;
    }
  }
  return true;
}

bool ends_ok(const std::string& w, const CaseEntry& e) {
  if (w.empty()) return false;
  if (e.end_u != 0 && w.front() != static_cast<char>('0' + e.end_u))
    return false;
  if (e.end_v != 0 && w.back() != static_cast<char>('0' + e.end_v))
    return false;
  return true;
}

// Empty string when every declared length expands to a valid word with the
// declared end letters; otherwise a short description of the first failure.
std::string entry_failure(const CaseEntry& e) {
  for (int len : e.verify_lengths) {
    const int letters = e.context == WordContext::kPath ? len + 1 : len;
    if (!e.pattern.can_expand(letters))
      return "no expansion with " + std::to_string(letters) + " letters";
    const std::string w = e.pattern.expand(letters);
    if (!ends_ok(w, e))
      return "expansion " + w + " does not carry the declared end letters";
    if (!word_valid(w, e.context)) return "packing conflict in " + w;
  }
  return {};
}

// Odometer over the free positions of `w` (digits 1..max_color, rightmost
// fastest), i.e. lexicographic order of the whole word given the pins.
bool next_candidate(std::string& w, const std::vector<int>& free_pos,
                    int max_color) {
  for (int i = static_cast<int>(free_pos.size()) - 1; i >= 0; --i) {
    if (w[free_pos[i]] < static_cast<char>('0' + max_color)) {
      ++w[free_pos[i]];
      return true;
    }
    w[free_pos[i]] = '1';
  }
  return false;
}

std::optional<CaseEntry> repair_attempt(const CaseEntry& broken,
                                        bool pin_heavy) {
  CaseEntry cand = broken;
  const bool literal = broken.pattern.mult == Multiplicity::kNone;
  std::string& field = literal ? cand.pattern.prefix : cand.pattern.suffix;
  const std::string orig = field;
  const int n = static_cast<int>(orig.size());
  std::vector<int> free_pos;
  for (int i = 0; i < n; ++i) {
    bool pinned = false;
    if (literal && i == 0 && broken.end_u != 0) {
      field[i] = static_cast<char>('0' + broken.end_u);
      pinned = true;
    } else if (i == n - 1 && broken.end_v != 0) {
      field[i] = static_cast<char>('0' + broken.end_v);
      pinned = true;
    } else if (pin_heavy && orig[i] >= '3') {
      field[i] = orig[i];
      pinned = true;
    }
    if (!pinned) {
      free_pos.push_back(i);
      field[i] = '1';
    }
  }
  while (true) {
    if (entry_failure(cand).empty()) return cand;
    if (!next_candidate(field, free_pos, broken.max_color)) return std::nullopt;
  }
}

}  // namespace

CaseTable::CaseTable() {
  struct Row {
    const char* key;
    const char* text;
    int end_u, end_v;
    std::vector<int> lens;
    int max_color = 4;
    WordContext ctx = WordContext::kPath;
  };
  const Row rows[] = {
      // two ends colored 2 and 3, three colors total
      {"p3/len2", "213", 2, 3, {2}, 3},
      {"p3/mod0", "(2131)*2", 2, 2, {4, 8, 12}, 3},
      {"p3/mod2", "21(3121)*3", 2, 3, {2, 6, 10}, 3},
      // both ends colored 4 (all paths of length >= 5)
      {"44/mod0", "4(1213)+1214", 4, 4, {8, 12, 16}},
      {"44/mod1", "413(1213)*214", 4, 4, {5, 9, 13}},
      {"44/mod2", "4(1213)+14", 4, 4, {6, 10, 14}},
      {"44/mod3", "4(1213)+214", 4, 4, {7, 11, 15}},
      // both ends colored 3
      {"33/len4", "31213", 3, 3, {4}},
      {"33/len5/a", "312413", 3, 3, {5}},
      {"33/len5/b", "314213", 3, 3, {5}},
      {"33/len6/a", "3121413", 3, 3, {6}},
      {"33/len6/b", "3141213", 3, 3, {6}},
      {"33/len6/c", "3124123", 3, 3, {6}},
      {"33/len6/d", "3214213", 3, 3, {6}},
      {"33/mod0", "3(1213)+1213", 3, 3, {8, 12, 16}},
      {"33/mod1", "3(1213)+41213", 3, 3, {9, 13, 17}},
      {"33/mod2", "3(1213)+141213", 3, 3, {10, 14, 18}},
      {"33/mod3", "3(1213)*1241213", 3, 3, {7, 11, 15}},
      // both ends colored 2
      {"22/len3", "2142", 2, 2, {3}},
      {"22/len4", "21312", 2, 2, {4}},
      {"22/len5/a", "213412", 2, 2, {5}},
      {"22/len5/b", "214312", 2, 2, {5}},
      {"22/len6/a", "2131412", 2, 2, {6}},
      {"22/len6/b", "2141321", 2, 2, {6}},
      {"22/len7/a", "21321412", 2, 2, {7}},
      {"22/len7/b", "21412312", 2, 2, {7}},
      {"22/mod0", "2(1312)+1312", 2, 2, {8, 12, 16}},
      {"22/mod1", "2(1312)+41312", 2, 2, {9, 13, 17}},
      {"22/mod2", "2(1312)+121312", 2, 2, {10, 14, 18}},
      {"22/mod3", "2(1312)+4121312", 2, 2, {11, 15, 19}},
      // ends colored 3 and 4
      {"34/len2", "314", 3, 4, {2}},
      {"34/len3/a", "3124", 3, 4, {3}},
      {"34/len3/b", "3214", 3, 4, {3}},
      {"34/len4", "31214", 3, 4, {4}},
      {"34/len5", "312134", 3, 4, {5}},
      {"34/len6", "3121314", 3, 4, {6}},
      {"34/mod0", "3(1213)+1214", 3, 4, {8, 12, 16}},
      {"34/mod1", "31214312(1312)*14", 3, 4, {9, 13, 17}},
      {"34/mod2", "31214(1312)+14", 3, 4, {10, 14, 18}},
      {"34/mod3", "3(1213)+214", 3, 4, {7, 11, 15}},
      // ends colored 2 and 4
      {"24/len2", "214", 2, 4, {2}},
      {"24/len3", "2134", 2, 4, {3}},
      {"24/len4", "21314", 2, 4, {4}},
      {"24/len5", "213214", 2, 4, {5}},
      {"24/len6", "2131214", 2, 4, {6}},
      {"24/len7/a", "21312134", 2, 4, {7}},
      {"24/len7/b", "21431214", 2, 4, {7}},
      {"24/len8/a", "213121314", 2, 4, {8}},
      {"24/len8/b", "214131214", 2, 4, {8}},
      {"24/mod0", "2(1312)+14131214", 2, 4, {12, 16, 20}},
      {"24/mod1", "2(1312)+13214", 2, 4, {9, 13, 17}},
      {"24/mod2", "2(1312)+14", 2, 4, {10, 14, 18}},
      {"24/mod3", "2(1312)+1431214", 2, 4, {11, 15, 19}},
      // ends colored 2 and 3
      {"23/len2", "213", 2, 3, {2}},
      {"23/len3", "2143", 2, 3, {3}},
      {"23/len4", "21413", 2, 3, {4}},
      {"23/len5", "214213", 2, 3, {5}},
      // ... when a bridging edge joins the ends (single long path)
      {"23/n1/mod0", "214(1312)+13", 2, 3, {8, 12, 16}},
      {"23/n1/mod1", "2142(1312)+13", 2, 3, {9, 13, 17}},
      {"23/n1/mod2", "21412(1312)*13", 2, 3, {6, 10, 14}},
      {"23/n1/mod3", "214312(1312)*13", 2, 3, {7, 11, 15}},
      // ... without a bridging edge (long paths may repeat)
      {"23/mod0", "2(1312)*13141213", 2, 3, {8, 12, 16}},
      {"23/mod1", "2(1312)+41213", 2, 3, {9, 13, 17}},
      {"23/mod2", "2(1312)+13", 2, 3, {6, 10, 14}},
      {"23/mod3", "2(1312)*1341213", 2, 3, {7, 11, 15}},
      // five-color upper bound, ends colored 4 and 5
      {"u5/len3/a", "4125", 4, 5, {3}, 5},
      {"u5/len3/b", "4215", 4, 5, {3}, 5},
      {"u5/len3/c", "4315", 4, 5, {3}, 5},
      {"u5/mod0", "4121(3121)*5", 4, 5, {4, 8, 12}, 5},
      {"u5/mod1", "41231(2131)*5", 4, 5, {5, 9, 13}, 5},
      {"u5/mod2", "41(2131)*5", 4, 5, {2, 6, 10}, 5},
      {"u5/mod3", "412(3121)*5", 4, 5, {7, 11, 15}, 5},
      // optimal cycle colorings (verified cyclically)
      {"cyc/len3", "123", 0, 0, {3}, 4, WordContext::kCycle},
      {"cyc/mod0", "(1213)+", 0, 0, {4, 8, 12}, 4, WordContext::kCycle},
      {"cyc/mod1", "(1213)*12134", 0, 0, {5, 9, 13}, 4, WordContext::kCycle},
      {"cyc/mod2", "(1213)*121314", 0, 0, {6, 10, 14}, 4, WordContext::kCycle},
      {"cyc/mod3", "(1213)*1213214", 0, 0, {7, 11, 15}, 4, WordContext::kCycle},
      // optimal path colorings; lengths below are edge counts
      {"path/mod0", "(1213)+", 0, 0, {3, 7, 11}, 3},
      {"path/mod1", "(1213)*1", 0, 0, {0, 4, 8}, 3},
      {"path/mod2", "(1213)*12", 0, 0, {1, 5, 9}, 3},
      {"path/mod3", "(1213)*121", 0, 0, {2, 6, 10}, 3},
  };

  for (const Row& row : rows) {
    CaseEntry e;
    e.key = row.key;
    e.context = row.ctx;
    e.end_u = row.end_u;
    e.end_v = row.end_v;
    e.max_color = row.max_color;
    e.pattern = PatternTemplate::parse(row.text);
    e.verify_lengths = row.lens;
    const std::string failure = entry_failure(e);
    if (!failure.empty()) {
      auto fixed = repair_attempt(e, /*pin_heavy=*/true);
      if (!fixed) fixed = repair_attempt(e, /*pin_heavy=*/false);
      if (!fixed)
        throw CertificateError("pattern " + e.key + " (" + row.text +
                               ") is invalid and unrepairable: " + failure);
      fixed->repaired = true;
      fixed->original = row.text;
      repairs_.push_back({e.key, row.text, fixed->pattern.str(), failure});
      e = *fixed;
    }
    entries_.push_back(std::move(e));
  }
}

const CaseTable& CaseTable::instance() {
  static const CaseTable table;
  return table;
}

const CaseEntry& CaseTable::at(const std::string& key) const {
  for (const CaseEntry& e : entries_)
    if (e.key == key) return e;
  throw CertificateError("unknown pattern key: " + key);
}

std::string CaseTable::report() const {
  std::ostringstream out;
  out << "pattern table: " << entries_.size() << " entries, "
      << repairs_.size() << " repaired\n";
  for (const CaseEntry& e : entries_) {
    out << "  " << e.key << ": " << e.pattern.str();
    if (e.end_u != 0) out << "  ends " << e.end_u << "," << e.end_v;
    out << "  " << (e.context == WordContext::kCycle ? "cycle" : "path")
        << " lengths";
    for (int len : e.verify_lengths) out << " " << len;
    if (e.repaired) out << "  [repaired; transcribed as " << e.original << "]";
    out << "\n";
  }
  if (!repairs_.empty()) {
    out << "repairs:\n";
    for (const RepairRecord& r : repairs_)
      out << "  " << r.key << ": " << r.original << " -> " << r.replacement
          << " (" << r.note << ")\n";
  }
  return out.str();
}

namespace {

std::vector<int> to_digits(const std::string& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (char c : w) out.push_back(c - '0');
  return out;
}

// Paints per-path color words onto the shared-end vertex layout of
// build_theta and checks the painted words agree on the shared ends.
class ThetaPainter {
 public:
  explicit ThetaPainter(const ThetaSpec& spec)
      : spec_(spec),
        graph_(build_theta(spec)),
        colors_(graph_.vertex_count(), 0) {
    int base = 2;
    for (int len : spec.lengths()) {
      bases_.push_back(base);
      base += len - 1;
    }
  }

  const ThetaSpec& spec() const { return spec_; }

  void paint(int path, const std::vector<int>& word) {
    const int len = spec_.lengths()[path];
    if (static_cast<int>(word.size()) != len + 1)
      throw CertificateError("word of " + std::to_string(word.size()) +
                             " letters painted on a path of length " +
                             std::to_string(len));
    set(0, word.front());
    set(1, word.back());
    for (int j = 1; j < len; ++j) set(bases_[path] + j - 1, word[j]);
  }

  void paint(int path, const std::string& word) { paint(path, to_digits(word)); }

  void paint_from_table(int path, const std::string& key) {
    const CaseEntry& e = CaseTable::instance().at(key);
    paint(path, e.pattern.expand(spec_.lengths()[path] + 1));
  }

  // Position `pos` along the cycle u -> path 0 -> v -> path 1 -> u (p = 2).
  void paint_cycle_position(int pos, int color) {
    const int l1 = spec_.lengths()[0];
    if (pos == 0)
      set(0, color);
    else if (pos < l1)
      set(bases_[0] + pos - 1, color);
    else if (pos == l1)
      set(1, color);
    else
      set(bases_[1] + (spec_.lengths()[1] - (pos - l1)) - 1, color);
  }

  PackingColoring finish() const {
    for (int c : colors_)
      if (c == 0) throw CertificateError("certificate left a vertex uncolored");
    PackingColoring out{colors_};
    const auto report = verify(distance_matrix(graph_), out, true);
    if (!report.valid) {
      const Violation& v = report.violations.front();
      throw CertificateError(
          "certificate fails verification: vertices " + graph_.label(v.a) +
          " and " + graph_.label(v.b) + " share color " +
          std::to_string(v.color) + " at distance " +
          std::to_string(v.distance));
    }
    return out;
  }

 private:
  void set(int v, int c) {
    if (colors_[v] != 0 && colors_[v] != c)
      throw CertificateError("conflicting colors for vertex " +
                             graph_.label(v));
    colors_[v] = c;
  }

  ThetaSpec spec_;
  LabeledGraph graph_;
  std::vector<int> bases_;
  std::vector<int> colors_;
};

std::string mod_key(const std::string& family, int len) {
  return family + "/mod" + std::to_string(len % 4);
}

void build_pcn3(ThetaPainter& painter, ConditionLabel label) {
  const auto& lens = painter.spec().lengths();
  if (label == ConditionLabel::kPcn3I) {
    for (int i = 0; i < painter.spec().path_count(); ++i) {
      if (lens[i] == 1)
        painter.paint(i, std::vector<int>{2, 3});
      else
        painter.paint_from_table(i, "p3/len2");
    }
    return;
  }
  const bool all_mod0 = std::all_of(lens.begin(), lens.end(),
                                    [](int l) { return l % 4 == 0; });
  const bool all_mod2 = std::all_of(lens.begin(), lens.end(),
                                    [](int l) { return l % 4 == 2; });
  if (!all_mod0 && !all_mod2)
    throw CertificateError(
        "3-color words need all lengths equal mod 4; use the cycle "
        "certificate for two-path graphs");
  for (int i = 0; i < painter.spec().path_count(); ++i)
    painter.paint_from_table(i, all_mod0 ? "p3/mod0" : "p3/mod2");
}

void build_ends_44(ThetaPainter& painter) {
  const auto& lens = painter.spec().lengths();
  for (int i = 0; i < painter.spec().path_count(); ++i)
    painter.paint_from_table(i, mod_key("44", lens[i]));
}

void build_ends_33(ThetaPainter& painter) {
  const auto& lens = painter.spec().lengths();
  const int n5 = painter.spec().count_of_length(5);
  static const char* kLen5[] = {"33/len5/a", "33/len5/b"};
  static const char* kLen6[] = {"33/len6/a", "33/len6/b", "33/len6/c",
                                "33/len6/d"};
  int used5 = 0;
  int used6 = n5;  // longer co-occurring words start deeper in the pool
  for (int i = 0; i < painter.spec().path_count(); ++i) {
    const int len = lens[i];
    if (len == 4)
      painter.paint_from_table(i, "33/len4");
    else if (len == 5)
      painter.paint_from_table(i, kLen5[used5++]);
    else if (len == 6)
      painter.paint_from_table(i, kLen6[used6++]);
    else
      painter.paint_from_table(i, mod_key("33", len));
  }
}

void build_ends_22(ThetaPainter& painter) {
  const auto& lens = painter.spec().lengths();
  // Of the at most two paths of middling length, the first word places its 4
  // near v and the second near u, keeping the two 4s far apart.
  int role = 0;
  for (int i = 0; i < painter.spec().path_count(); ++i) {
    const int len = lens[i];
    if (len == 3)
      painter.paint_from_table(i, "22/len3");
    else if (len == 4)
      painter.paint_from_table(i, "22/len4");
    else if (len >= 5 && len <= 7)
      painter.paint_from_table(i, "22/len" + std::to_string(len) +
                                      (role++ == 0 ? "/a" : "/b"));
    else
      painter.paint_from_table(i, mod_key("22", len));
  }
}

void build_ends_34(ThetaPainter& painter) {
  const auto& lens = painter.spec().lengths();
  static const char* kLen3[] = {"34/len3/a", "34/len3/b"};
  int used3 = 0;
  for (int i = 0; i < painter.spec().path_count(); ++i) {
    const int len = lens[i];
    if (len == 1)
      painter.paint(i, std::vector<int>{3, 4});
    else if (len == 2)
      painter.paint_from_table(i, "34/len2");
    else if (len == 3)
      painter.paint_from_table(i, kLen3[used3++]);
    else if (len == 4)
      painter.paint_from_table(i, "34/len4");
    else if (len == 5)
      painter.paint_from_table(i, "34/len5");
    else if (len == 6)
      painter.paint_from_table(i, "34/len6");
    else
      painter.paint_from_table(i, mod_key("34", len));
  }
}

void build_ends_24(ThetaPainter& painter, ConditionLabel label) {
  const auto& lens = painter.spec().lengths();
  const bool len7_first =
      label == ConditionLabel::kG || label == ConditionLabel::kL;
  const bool len8_first =
      label == ConditionLabel::kC || label == ConditionLabel::kK;
  for (int i = 0; i < painter.spec().path_count(); ++i) {
    const int len = lens[i];
    if (len == 1)
      painter.paint(i, std::vector<int>{2, 4});
    else if (len <= 6)
      painter.paint_from_table(i, "24/len" + std::to_string(len));
    else if (len == 7)
      painter.paint_from_table(i, len7_first ? "24/len7/a" : "24/len7/b");
    else if (len == 8)
      painter.paint_from_table(i, len8_first ? "24/len8/a" : "24/len8/b");
    else
      painter.paint_from_table(i, mod_key("24", len));
  }
}

void build_ends_23(ThetaPainter& painter) {
  const auto& lens = painter.spec().lengths();
  const bool bridged = painter.spec().count_of_length(1) == 1;
  for (int i = 0; i < painter.spec().path_count(); ++i) {
    const int len = lens[i];
    if (len == 1)
      painter.paint(i, std::vector<int>{2, 3});
    else if (len <= 5)
      painter.paint_from_table(i, "23/len" + std::to_string(len));
    else
      painter.paint_from_table(i, mod_key(bridged ? "23/n1" : "23", len));
  }
}

void build_upper(ThetaPainter& painter) {
  const auto& lens = painter.spec().lengths();
  static const char* kLen3[] = {"u5/len3/a", "u5/len3/b", "u5/len3/c"};
  int threes = 0;
  for (int i = 0; i < painter.spec().path_count(); ++i) {
    const int len = lens[i];
    if (len == 1) {
      painter.paint(i, std::vector<int>{4, 5});
    } else if (len == 3) {
      if (threes < 3)
        painter.paint_from_table(i, kLen3[threes]);
      else
        // fourth and later length-3 paths each get a fresh color
        painter.paint(i, std::vector<int>{4, 1, threes + 3, 5});
      ++threes;
    } else {
      painter.paint_from_table(i, mod_key("u5", len));
    }
  }
}

std::string cycle_word(int n) {
  if (n < 3)
    throw CertificateError("cycle needs at least three vertices");
  const CaseTable& table = CaseTable::instance();
  const CaseEntry& e =
      n == 3 ? table.at("cyc/len3") : table.at(mod_key("cyc", n));
  return e.pattern.expand(n);
}

}  // namespace

PackingColoring certificate_for_condition(const ThetaSpec& spec,
                                          ConditionLabel label) {
  const CountProfile profile(spec);
  auto require = [&](bool ok) {
    if (!ok)
      throw CertificateError("condition " + to_string(label) +
                             " does not hold for this spec");
  };
  ThetaPainter painter(spec);
  switch (label) {
    case ConditionLabel::kPcn3I:
    case ConditionLabel::kPcn3II:
      require(pcn3_holds(spec) == label);
      build_pcn3(painter, label);
      break;
    case ConditionLabel::kA:
      require(condition_holds(label, spec));
      build_ends_44(painter);
      break;
    case ConditionLabel::kB:
      require(condition_holds(label, spec));
      build_ends_33(painter);
      break;
    case ConditionLabel::kD:
    case ConditionLabel::kE:
      require(condition_holds(label, spec));
      build_ends_22(painter);
      break;
    case ConditionLabel::kH:
    case ConditionLabel::kJ:
      require(condition_holds(label, spec));
      build_ends_34(painter);
      break;
    case ConditionLabel::kC:
    case ConditionLabel::kF:
    case ConditionLabel::kG:
    case ConditionLabel::kK:
    case ConditionLabel::kL:
    case ConditionLabel::kM:
      require(condition_holds(label, spec));
      build_ends_24(painter, label);
      break;
    case ConditionLabel::kI:
    case ConditionLabel::kN:
      require(condition_holds(label, spec));
      build_ends_23(painter);
      break;
    case ConditionLabel::kN3Dominated:
      require(profile.n[3] >= 3);
      build_upper(painter);
      break;
    case ConditionLabel::kUpperBound:
      build_upper(painter);
      break;
    case ConditionLabel::kCycleCase: {
      require(spec.path_count() == 2);
      const std::string word = cycle_word(spec.lengths()[0] + spec.lengths()[1]);
      for (int pos = 0; pos < static_cast<int>(word.size()); ++pos)
        painter.paint_cycle_position(pos, word[pos] - '0');
      break;
    }
  }
  return painter.finish();
}

PackingColoring certificate_theta(const ThetaSpec& spec, int k,
                                  ConditionLabel trace) {
  const PcnFormulaResult expected = pcn_theta(spec);
  if (expected.k != k || expected.trace != trace)
    throw CertificateError("requested certificate (" + std::to_string(k) +
                           ", " + to_string(trace) +
                           ") does not match the computed value (" +
                           std::to_string(expected.k) + ", " +
                           to_string(expected.trace) + ")");
  PackingColoring coloring = certificate_for_condition(spec, trace);
  if (coloring.color_count() != k)
    throw CertificateError("certificate uses " +
                           std::to_string(coloring.color_count()) +
                           " colors, expected " + std::to_string(k));
  return coloring;
}

PackingColoring certificate_cycle(int n) {
  const std::string word = cycle_word(n);
  PackingColoring out{to_digits(word)};
  const auto report = verify(distance_matrix(build_cycle(n)), out, true);
  if (!report.valid)
    throw CertificateError("cycle word " + word + " fails verification");
  return out;
}

PackingColoring certificate_path(int n) {
  if (n < 1) throw CertificateError("path needs at least one vertex");
  const CaseEntry& e = CaseTable::instance().at(mod_key("path", n));
  PackingColoring out{to_digits(e.pattern.expand(n))};
  const auto report = verify(distance_matrix(build_path(n)), out, true);
  if (!report.valid)
    throw CertificateError("path word fails verification");
  return out;
}

}  // namespace thetapcn
