#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "thetapcn/formulas.hpp"
#include "thetapcn/graph.hpp"
#include "thetapcn/verifier.hpp"

namespace thetapcn {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Multiplicity { kNone, kStar, kPlus };

// Color-word family "prefix(block)*suffix" or "prefix(block)+suffix"; with
// kNone the word is just the literal prefix.  Words are written over digits
// 1..9, one letter per vertex.
struct PatternTemplate {
  std::string prefix;
  std::string block;
  Multiplicity mult = Multiplicity::kNone;
  std::string suffix;

  // Accepts "21312", "2(1312)+41312", "(1213)*12134", ...
  static PatternTemplate parse(const std::string& text);

  std::string str() const;
  int min_letters() const;
  bool can_expand(int letters) const;
  // The unique word of exactly `letters` letters, or CertificateError when
  // the length residue admits no repetition count.
  std::string expand(int letters) const;
};

enum class WordContext { kPath, kCycle };

// One registered color word (or word family): its declared end colors and the
// lengths it is re-verified on when the table loads.
struct CaseEntry {
  std::string key;
  WordContext context = WordContext::kPath;
  int end_u = 0;      // declared first letter; 0 = unconstrained
  int end_v = 0;      // declared last letter; 0 = unconstrained
  int max_color = 4;  // alphabet bound for the repair search
  PatternTemplate pattern;
  std::vector<int> verify_lengths;  // path lengths (edges) or cycle sizes
  bool repaired = false;
  std::string original;  // transcribed text, kept when a repair replaced it
};

struct RepairRecord {
  std::string key;
  std::string original;
  std::string replacement;
  std::string note;
};

// Immutable registry of every color word the certificate builders use.
// Loading re-verifies each entry on its declared lengths (end letters and
// packing validity along a standalone path or cycle).  An entry that fails is
// replaced by the lexicographically smallest valid word of the same shape:
// end letters are forced, letters >= 3 of the transcribed word are kept when
// possible (they carry the structure; slips are expected in filler letters),
// and for word families only the suffix is searched.  Unrepairable entries
// make loading throw.
class CaseTable {
 public:
  static const CaseTable& instance();

  const CaseEntry& at(const std::string& key) const;
  const std::vector<CaseEntry>& entries() const { return entries_; }
  const std::vector<RepairRecord>& repairs() const { return repairs_; }
  std::string report() const;

 private:
  CaseTable();

  std::vector<CaseEntry> entries_;
  std::vector<RepairRecord> repairs_;
};

// Certificate attaining pcn_theta(spec).  (k, trace) must match the formula
// output; the coloring is verified and uses exactly k colors.
PackingColoring certificate_theta(const ThetaSpec& spec, int k,
                                  ConditionLabel trace);

// Coloring for one specific rule; the label must hold for the spec but need
// not be the one pcn_theta reports (several conditions may overlap).  The
// result is verified against build_theta(spec) before being returned.
PackingColoring certificate_for_condition(const ThetaSpec& spec,
                                          ConditionLabel label);

// Optimal packing colorings of plain cycles and paths, indexed like
// build_cycle(n) / build_path(n).
PackingColoring certificate_cycle(int n);
PackingColoring certificate_path(int n);

}  // namespace thetapcn
