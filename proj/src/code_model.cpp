#include "cript/code_model.hpp"

#include <algorithm>
#include <map>

namespace cript {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::boundary_first: return "boundary-first";
    case Rule::boundary_last: return "boundary-last";
    case Rule::evenness_b: return "evenness-B";
    case Rule::evenness_d: return "evenness-D";
    case Rule::balance: return "balance";
    case Rule::alphabet: return "alphabet";
  }
  return "unknown";
}

namespace {

std::string describe(const ValidationReport& report) {
  if (report.valid()) return "invalid code";
  const Violation& v = report.violations.front();
  std::string msg = "invalid code: " + v.message;
  if (report.violations.size() > 1)
    msg += " (+" + std::to_string(report.violations.size() - 1) + " more)";
  return msg;
}

std::string ref_text(int s, int p) {
  return "string " + std::to_string(s) + " position " + std::to_string(p);
}

void check_evenness(const CriptCode& code, Letter kind, Rule rule, ValidationReport& report) {
  const char name = static_cast<char>(kind);
  std::size_t seen = 0;
  for (std::size_t s = 0; s < code.strings.size(); ++s) {
    const auto& str = code.strings[s];
    for (std::size_t p = 0; p < str.size(); ++p) {
      if (str[p] != kind) continue;
      if (seen % 2 == 0 && (p + 1 == str.size() || str[p + 1] != kind)) {
        report.violations.push_back(
            {rule, static_cast<int>(s), static_cast<int>(p),
             std::string(1, name) + " at " + ref_text(static_cast<int>(s), static_cast<int>(p)) +
                 " follows an even number of " + name + " but is not followed by " + name});
      }
      ++seen;
    }
  }
}

void check_boundary(const CriptCode& code, std::size_t s, Letter only, Rule rule,
                    ValidationReport& report) {
  const auto& str = code.strings[s];
  const char* which = rule == Rule::boundary_first ? "first" : "last";
  if (str.empty()) {
    report.violations.push_back({rule, static_cast<int>(s), -1,
                                 std::string(which) + " string is empty"});
    return;
  }
  for (std::size_t p = 0; p < str.size(); ++p) {
    if (str[p] != only) {
      report.violations.push_back(
          {rule, static_cast<int>(s), static_cast<int>(p),
           std::string(which) + " string may contain only " + static_cast<char>(only) +
               ", found " + static_cast<char>(str[p]) + " at position " + std::to_string(p)});
    }
  }
}

std::size_t lower_ends(const CriptString& s) {
  auto n = count_letters(s);
  return n.b + n.c;
}

std::size_t upper_ends(const CriptString& s) {
  auto n = count_letters(s);
  return n.c + n.d;
}

}  // namespace

InvalidCodeError::InvalidCodeError(ValidationReport report)
    : DomainError(describe(report)), report_(std::move(report)) {}

ValidationReport validate(const CriptCode& code) {
  ValidationReport report;
  if (code.strings.empty()) return report;

  check_boundary(code, 0, Letter::B, Rule::boundary_first, report);
  check_boundary(code, code.strings.size() - 1, Letter::D, Rule::boundary_last, report);
  check_evenness(code, Letter::B, Rule::evenness_b, report);
  check_evenness(code, Letter::D, Rule::evenness_d, report);

  for (std::size_t k = 0; k + 1 < code.strings.size(); ++k) {
    const std::size_t above = lower_ends(code.strings[k]);
    const std::size_t below = upper_ends(code.strings[k + 1]);
    if (above != below) {
      report.violations.push_back(
          {Rule::balance, static_cast<int>(k), -1,
           "balance fails between strings " + std::to_string(k) + " and " + std::to_string(k + 1) +
               ": B+C = " + std::to_string(above) + " vs D+C = " + std::to_string(below)});
    }
  }
  return report;
}

ValidationReport validate_text(std::string_view text) {
  ValidationReport report;
  std::string cleaned;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    switch (c) {
      case 'B': case 'C': case 'D': case 'b': case 'c': case 'd': case ';':
      case ' ': case '\t': case '\r': case '\n': case '\v': case '\f':
        cleaned += c;
        break;
      default:
        report.violations.push_back({Rule::alphabet, -1, static_cast<int>(i + 1),
                                     std::string("invalid character '") + c + "' at character " +
                                         std::to_string(i + 1)});
    }
  }
  if (!report.valid()) return report;
  return validate(parse_code(cleaned));
}

std::vector<LetterPair> conjugate_pairs(const CriptCode& code) {
  std::vector<LetterPair> out;
  ValidationReport report;
  for (Letter kind : {Letter::B, Letter::D}) {
    const Rule rule = kind == Letter::B ? Rule::evenness_b : Rule::evenness_d;
    std::vector<LetterRef> refs;
    for (std::size_t s = 0; s < code.strings.size(); ++s)
      for (std::size_t p = 0; p < code.strings[s].size(); ++p)
        if (code.strings[s][p] == kind) refs.push_back({static_cast<int>(s), static_cast<int>(p)});
    for (std::size_t r = 0; r + 1 < refs.size(); r += 2) {
      const LetterRef a = refs[r];
      const LetterRef b = refs[r + 1];
      if (a.string_index != b.string_index || b.position != a.position + 1) {
        report.violations.push_back({rule, a.string_index, a.position,
                                     std::string(1, static_cast<char>(kind)) + " at " +
                                         ref_text(a.string_index, a.position) +
                                         " has no adjacent conjugate"});
      } else {
        out.emplace_back(a, b);
      }
    }
    if (refs.size() % 2 == 1) {
      const LetterRef last = refs.back();
      report.violations.push_back({rule, last.string_index, last.position,
                                   "odd number of " + std::string(1, static_cast<char>(kind)) +
                                       " letters"});
    }
  }
  if (!report.valid()) throw InvalidCodeError(std::move(report));
  return out;
}

ContactResult contact_pairs(const CriptCode& code) {
  ContactResult result;
  for (std::size_t k = 0; k + 1 < code.strings.size(); ++k) {
    const auto& v = code.strings[k];
    const auto& w = code.strings[k + 1];
    std::vector<int> up, down;
    for (std::size_t p = 0; p < v.size(); ++p)
      if (v[p] != Letter::D) up.push_back(static_cast<int>(p));
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p] != Letter::B) down.push_back(static_cast<int>(p));
    if (up.size() != down.size()) {
      result.unbalanced_seams.push_back(static_cast<int>(k));
      continue;
    }
    for (std::size_t r = 0; r < up.size(); ++r)
      result.pairs.emplace_back(LetterRef{static_cast<int>(k), up[r]},
                                LetterRef{static_cast<int>(k + 1), down[r]});
  }
  return result;
}

LinkGraph link_graph(const CriptCode& code) {
  LinkGraph g;
  g.conjugate_edges = conjugate_pairs(code);
  auto contacts = contact_pairs(code);
  if (!contacts.unbalanced_seams.empty()) throw InvalidCodeError(validate(code));
  g.contact_edges = std::move(contacts.pairs);
  return g;
}

std::vector<Curve> boundary_curves(const CriptCode& code) {
  auto report = validate(code);
  if (!report.valid()) throw InvalidCodeError(std::move(report));
  const LinkGraph g = link_graph(code);

  // Flat adjacency: slot 0 holds the conjugate (or upper contact for C),
  // slot 1 the remaining neighbour.
  std::vector<std::size_t> offset(code.strings.size() + 1, 0);
  for (std::size_t s = 0; s < code.strings.size(); ++s) offset[s + 1] = offset[s] + code.strings[s].size();
  const std::size_t total = offset.back();
  auto id = [&](LetterRef r) { return offset[static_cast<std::size_t>(r.string_index)] + static_cast<std::size_t>(r.position); };
  std::vector<LetterRef> ref_of(total);
  for (std::size_t s = 0; s < code.strings.size(); ++s)
    for (std::size_t p = 0; p < code.strings[s].size(); ++p)
      ref_of[offset[s] + p] = {static_cast<int>(s), static_cast<int>(p)};

  std::vector<std::vector<std::size_t>> adj(total);
  for (auto [a, b] : g.conjugate_edges) {
    adj[id(a)].push_back(id(b));
    adj[id(b)].push_back(id(a));
  }
  for (auto [a, b] : g.contact_edges) {
    adj[id(a)].push_back(id(b));
    adj[id(b)].push_back(id(a));
  }
  for (std::size_t v = 0; v < total; ++v) {
    if (adj[v].size() != 2)
      throw DomainError("link graph degree " + std::to_string(adj[v].size()) + " at " +
                        ref_text(ref_of[v].string_index, ref_of[v].position));
  }

  std::vector<Curve> curves;
  std::vector<bool> seen(total, false);
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    Curve curve;
    std::size_t prev = start;
    std::size_t cur = start;
    do {
      seen[cur] = true;
      curve.push_back(ref_of[cur]);
      const std::size_t next = (cur == start) ? adj[cur][0] : (adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
      prev = cur;
      cur = next;
    } while (cur != start);
    curves.push_back(std::move(curve));
  }
  return curves;
}

CriptCode restrict_code(const CriptCode& code, const std::vector<LetterRef>& keep) {
  std::vector<std::vector<bool>> mask(code.strings.size());
  for (std::size_t s = 0; s < code.strings.size(); ++s) mask[s].assign(code.strings[s].size(), false);
  for (const auto& r : keep) mask[static_cast<std::size_t>(r.string_index)][static_cast<std::size_t>(r.position)] = true;
  CriptCode out;
  for (std::size_t s = 0; s < code.strings.size(); ++s) {
    CriptString str;
    for (std::size_t p = 0; p < code.strings[s].size(); ++p)
      if (mask[s][p]) str.push_back(code.strings[s][p]);
    if (!str.empty() && !is_trivial(str)) out.strings.push_back(std::move(str));
  }
  return out;
}

std::vector<DomainComponent> domain_component_details(const CriptCode& code) {
  const auto curves = boundary_curves(code);

  // Owner curve of every letter.
  std::map<LetterRef, int> curve_of;
  for (std::size_t c = 0; c < curves.size(); ++c)
    for (const auto& r : curves[c]) curve_of[r] = static_cast<int>(c);

  // Curves are produced in order of their smallest letter, which is the left
  // letter of the curve's topmost B pair; letters left of it belong to
  // curves already classified.
  std::vector<int> component_of(curves.size(), -1);
  std::vector<DomainComponent> components;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const LetterRef top = curves[c].front();
    if (top.position % 2 == 0) {
      component_of[c] = static_cast<int>(components.size());
      components.push_back({});
    } else {
      const int left_curve = curve_of.at({top.string_index, top.position - 1});
      component_of[c] = component_of[static_cast<std::size_t>(left_curve)];
    }
    components[static_cast<std::size_t>(component_of[c])].curves.push_back(static_cast<int>(c));
  }

  for (auto& comp : components) {
    std::vector<LetterRef> letters;
    for (int c : comp.curves) letters.insert(letters.end(), curves[static_cast<std::size_t>(c)].begin(), curves[static_cast<std::size_t>(c)].end());
    comp.code = restrict_code(code, letters);
  }
  return components;
}

std::vector<CriptCode> domain_components(const CriptCode& code) {
  std::vector<CriptCode> out;
  for (auto& comp : domain_component_details(code)) out.push_back(std::move(comp.code));
  return out;
}

}  // namespace cript
