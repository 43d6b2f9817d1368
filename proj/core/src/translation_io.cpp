#include <sstream>

#include "crnt/error.hpp"
#include "crnt/translation.hpp"

namespace crnt {

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Translation parse_translation(std::string_view text, const Network& source) {
  std::vector<IntVec> shift(source.reaction_count(), IntVec(source.species_count(), 0));
  std::vector<bool> given(source.reaction_count(), false);
  std::map<Complex, std::size_t> choice;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::string line = trimmed(raw);
    if (line.empty()) continue;
    try {
      if (line.rfind("shift ", 0) == 0) {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, 1, "expected 'shift <rate>: <combination>'");
        std::string rate = trimmed(line.substr(6, colon - 6));
        auto i = source.find_reaction(rate);
        if (!i) throw ParseError(line_no, 7, "unknown reaction '" + rate + "'");
        if (given[*i]) throw ParseError(line_no, 7, "reaction '" + rate + "' shifted twice");
        shift[*i] = parse_species_combination(line.substr(colon + 1), source, true);
        given[*i] = true;
      } else if (line.rfind("kinetic-choice ", 0) == 0) {
        auto sep = line.find(":=");
        if (sep == std::string::npos) throw ParseError(line_no, 1, "expected ':=' in kinetic-choice line");
        IntVec target = parse_species_combination(line.substr(15, sep - 15), source, false);
        IntVec kin = parse_species_combination(line.substr(sep + 2), source, false);
        auto p = source.find_complex(Complex(kin));
        if (!p) throw ParseError(line_no, sep + 3, "kinetic choice is not a complex of the source network");
        choice[Complex(target)] = *p;
      } else {
        throw ParseError(line_no, 1, "expected 'shift' or 'kinetic-choice'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(line_no, 1, e.message());
    }
  }
  return translate_by_shifts(source, shift, choice);
}

std::string serialize_translation(const Translation& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.source.reaction_count(); ++i)
    os << "shift " << t.source.reaction(i).rate << ": " << t.source.format(t.shift[i], true) << "\n";
  const Network& tn = t.translated.base();
  TranslationClassification c = classify(t);
  for (auto j : c.improper_complexes)
    os << "kinetic-choice " << tn.format(tn.complex(j)) << " := " << t.source.format(t.source.complex(*t.kinetic_source[j]))
       << "\n";
  return os.str();
}

}  // namespace crnt
