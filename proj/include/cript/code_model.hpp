#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cript/code.hpp"
#include "cript/error.hpp"

namespace cript {

/// Letter `position` of string `string_index`, both 0-based.
struct LetterRef {
  int string_index = 0;
  int position = 0;

  friend bool operator==(const LetterRef&, const LetterRef&) = default;
  friend auto operator<=>(const LetterRef&, const LetterRef&) = default;
};

using LetterPair = std::pair<LetterRef, LetterRef>;

enum class Rule { boundary_first, boundary_last, evenness_b, evenness_d, balance, alphabet };

const char* rule_name(Rule r);

struct Violation {
  Rule rule;
  int string_index = -1;  // -1 when the violation concerns the raw text
  int position = -1;      // letter position, or character offset for alphabet errors
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
};

/// A code word that fails validation, with every violation found.
class InvalidCodeError : public DomainError {
 public:
  explicit InvalidCodeError(ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Checks the boundary, evenness and balance conditions; reports every
/// violation. The empty word (no strings) is valid.
ValidationReport validate(const CriptCode& code);

/// Parses and validates; characters outside the alphabet become `alphabet`
/// violations instead of exceptions.
ValidationReport validate_text(std::string_view text);

/// Pairs the 1st/2nd, 3rd/4th, ... occurrences of B (then of D) in reading
/// order. Throws InvalidCodeError if a pair is odd or not adjacent.
std::vector<LetterPair> conjugate_pairs(const CriptCode& code);

struct ContactResult {
  std::vector<LetterPair> pairs;       // (upper letter, lower letter)
  std::vector<int> unbalanced_seams;   // seam k sits between strings k and k+1
};

/// Rank-matches the B/C letters of each string with the C/D letters of the
/// next one. Seams failing the balance equality yield no pairs.
ContactResult contact_pairs(const CriptCode& code);

struct LinkGraph {
  std::vector<LetterPair> conjugate_edges;
  std::vector<LetterPair> contact_edges;
};

LinkGraph link_graph(const CriptCode& code);

using Curve = std::vector<LetterRef>;

/// Cycles of the link graph in traversal order. Each cycle starts at its
/// smallest letter and leaves through the conjugate edge. Throws
/// InvalidCodeError for invalid words.
std::vector<Curve> boundary_curves(const CriptCode& code);

struct DomainComponent {
  CriptCode code;
  std::vector<int> curves;  // indices into boundary_curves(); outer boundary first
};

/// Groups boundary curves into connected components of the domain. A curve
/// whose topmost B pair has an odd number of letters to its left is a hole
/// of the component owning the letter immediately to its left.
std::vector<DomainComponent> domain_component_details(const CriptCode& code);

std::vector<CriptCode> domain_components(const CriptCode& code);

/// The minimal code of the letters in `keep` (other letters removed, empty
/// and trivial strings dropped).
CriptCode restrict_code(const CriptCode& code, const std::vector<LetterRef>& keep);

}  // namespace cript
