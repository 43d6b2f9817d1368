// Line-oriented reaction-network format:
//
//   network <name>
//   species A B C            (optional; fixes the species order)
//   A + B -> C ; k1
//   C <-> 2 A ; k2, k3       (forward rate first)
//   kinetic A + B := 2 A     (generalized mass action only)
//
// '#' starts a comment.  "0" denotes the zero complex.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "crnt/error.hpp"
#include "crnt/model.hpp"

namespace crnt {

namespace {

struct Term {
  std::string species;
  std::int64_t coeff;
};

struct RawComplex {
  std::vector<Term> terms;
  std::size_t column = 1;
};

struct RawReaction {
  RawComplex lhs, rhs;
  std::string rate;
  std::size_t line;
};

struct RawKinetic {
  RawComplex target, kinetic;
  std::size_t line;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

// Parses "2 A + B" or "0".  `col` is the 1-based column of text[0].
RawComplex parse_complex(std::string_view text, std::size_t line, std::size_t col, bool allow_signed) {
  RawComplex out;
  std::size_t off = 0;
  std::string_view s = trim(text, &off);
  out.column = col + off;
  if (s.empty()) throw ParseError(line, col, "empty complex");
  if (s == "0") return out;

  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    // sign / separator
    std::int64_t sign = 1;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') {
        if (!allow_signed) throw ParseError(line, out.column + i, "negative coefficient");
        sign = -1;
      }
      ++i;
    } else if (!first) {
      throw ParseError(line, out.column + i, "expected '+' between terms");
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t term_col = out.column + i;
    if (i >= s.size()) throw ParseError(line, term_col, "dangling '+'");

    std::int64_t coeff = 1;
    std::size_t d = i;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    const bool had_digits = d > i;
    if (had_digits) {
      if (d - i > 9) throw ParseError(line, term_col, "coefficient too large");
      coeff = std::stoll(std::string(s.substr(i, d - i)));
      i = d;
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    std::size_t e = i;
    while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
    std::string name(s.substr(i, e - i));
    if (name.empty()) {
      // A lone "0" term inside a signed expression means nothing.
      if (had_digits && coeff == 0 && allow_signed) {
        first = false;
        continue;
      }
      if (i < s.size() && s[i] == '~') throw ParseError(line, out.column + i, "'~' is reserved");
      throw ParseError(line, term_col, "expected a species name");
    }
    if (!is_identifier(name)) throw ParseError(line, term_col, "invalid species name '" + name + "'");
    if (coeff == 0) throw ParseError(line, term_col, "zero coefficient");
    out.terms.push_back({name, sign * coeff});
    i = e;
    first = false;
  }
  return out;
}

std::vector<std::string> split_rates(std::string_view text, std::size_t line, std::size_t col) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::size_t off = 0;
      std::string_view tok = trim(text.substr(start, i - start), &off);
      if (!is_identifier(tok)) {
        if (tok.find('~') != std::string_view::npos)
          throw ParseError(line, col + start + off, "'~' is reserved for generated symbols");
        throw ParseError(line, col + start + off, "invalid rate symbol '" + std::string(tok) + "'");
      }
      out.emplace_back(tok);
      start = i + 1;
    }
  }
  return out;
}

struct Parsed {
  std::string name;
  std::vector<std::string> declared;
  std::vector<RawReaction> reactions;
  std::vector<RawKinetic> kinetic;
};

Parsed parse_lines(std::string_view text) {
  Parsed p;
  std::set<std::string> declared_set;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t off = 0;
    std::string_view line = trim(raw, &off);
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    const std::size_t col = off + 1;

    auto keyword = [&](std::string_view kw) {
      return line.size() > kw.size() && line.substr(0, kw.size()) == kw &&
             std::isspace(static_cast<unsigned char>(line[kw.size()]));
    };

    if (keyword("network")) {
      p.name = std::string(trim(line.substr(7)));
    } else if (keyword("species")) {
      std::istringstream is{std::string(line.substr(7))};
      std::string s;
      while (is >> s) {
        if (!is_identifier(s)) throw ParseError(line_no, col, "invalid species name '" + s + "'");
        if (!declared_set.insert(s).second) throw ParseError(line_no, col, "species '" + s + "' declared twice");
        p.declared.push_back(s);
      }
    } else if (keyword("kinetic")) {
      std::string_view body = line.substr(7);
      auto sep = body.find(":=");
      if (sep == std::string_view::npos) throw ParseError(line_no, col, "expected ':=' in kinetic line");
      RawKinetic k;
      k.line = line_no;
      k.target = parse_complex(body.substr(0, sep), line_no, col + 7, false);
      k.kinetic = parse_complex(body.substr(sep + 2), line_no, col + 7 + sep + 2, false);
      p.kinetic.push_back(std::move(k));
    } else {
      auto semi = line.find(';');
      if (semi == std::string_view::npos) throw ParseError(line_no, col, "missing ';' before the rate symbol");
      std::string_view eq = line.substr(0, semi);
      std::vector<std::string> rates = split_rates(line.substr(semi + 1), line_no, col + semi + 1);
      bool reversible = false;
      std::size_t arrow = eq.find("<->");
      std::size_t arrow_len = 3;
      if (arrow != std::string_view::npos) {
        reversible = true;
      } else {
        arrow = eq.find("->");
        arrow_len = 2;
        if (arrow == std::string_view::npos) throw ParseError(line_no, col, "missing '->' or '<->'");
      }
      if (eq.find("->", arrow + arrow_len) != std::string_view::npos)
        throw ParseError(line_no, col + arrow + arrow_len, "more than one arrow");
      RawComplex lhs = parse_complex(eq.substr(0, arrow), line_no, col, false);
      RawComplex rhs = parse_complex(eq.substr(arrow + arrow_len), line_no, col + arrow + arrow_len, false);
      if (reversible) {
        if (rates.size() != 2)
          throw ParseError(line_no, col + semi + 1, "reversible reaction needs two rate symbols");
        p.reactions.push_back({lhs, rhs, rates[0], line_no});
        p.reactions.push_back({rhs, lhs, rates[1], line_no});
      } else {
        if (rates.size() != 1) throw ParseError(line_no, col + semi + 1, "reaction needs exactly one rate symbol");
        p.reactions.push_back({lhs, rhs, rates[0], line_no});
      }
    }
    if (nl == text.size()) break;
  }
  if (p.reactions.empty()) throw ParseError(0, 0, "network has no reactions");
  return p;
}

Complex to_complex(const RawComplex& raw, const std::map<std::string, std::size_t>& index, std::size_t m,
                   std::size_t line) {
  IntVec v(m, 0);
  for (const auto& t : raw.terms) {
    auto it = index.find(t.species);
    if (it == index.end()) throw ParseError(line, raw.column, "unknown species '" + t.species + "'");
    v[it->second] += t.coeff;
  }
  return Complex(std::move(v));
}

GeneralizedNetwork build(const Parsed& p, bool allow_kinetic) {
  std::vector<std::string> species = p.declared;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < species.size(); ++i) index[species[i]] = i;
  for (const auto& r : p.reactions)
    for (const RawComplex* c : {&r.lhs, &r.rhs})
      for (const auto& t : c->terms)
        if (index.emplace(t.species, species.size()).second) species.push_back(t.species);

  const std::size_t m = species.size();
  std::vector<Complex> complexes;
  std::vector<Reaction> reactions;
  std::set<std::string> rate_symbols;
  auto intern = [&](const Complex& c) {
    auto it = std::find(complexes.begin(), complexes.end(), c);
    if (it != complexes.end()) return static_cast<std::size_t>(it - complexes.begin());
    complexes.push_back(c);
    return complexes.size() - 1;
  };
  for (const auto& r : p.reactions) {
    Complex a = to_complex(r.lhs, index, m, r.line);
    Complex b = to_complex(r.rhs, index, m, r.line);
    if (a == b) throw ParseError(r.line, r.lhs.column, "self-reaction");
    if (!rate_symbols.insert(r.rate).second)
      throw ParseError(r.line, r.lhs.column, "rate symbol '" + r.rate + "' used twice");
    std::size_t ia = intern(a);
    std::size_t ib = intern(b);
    reactions.push_back({ia, ib, r.rate});
  }

  for (std::size_t s = 0; s < m; ++s) {
    bool present = std::any_of(complexes.begin(), complexes.end(), [&](const Complex& c) { return c[s] > 0; });
    if (!present) throw ParseError(0, 0, "species '" + species[s] + "' is declared but never used");
  }

  Network net(species, complexes, reactions, p.name);
  if (p.kinetic.empty()) return GeneralizedNetwork(std::move(net));
  if (!allow_kinetic) throw ParseError(p.kinetic.front().line, 1, "kinetic lines need a generalized network");

  std::vector<std::optional<Complex>> kin(net.complex_count());
  for (const auto& k : p.kinetic) {
    Complex target = to_complex(k.target, index, m, k.line);
    auto j = net.find_complex(target);
    if (!j) throw ParseError(k.line, k.target.column, "kinetic line names a complex not in the network");
    if (kin[*j]) throw ParseError(k.line, k.target.column, "kinetic complex assigned twice");
    kin[*j] = to_complex(k.kinetic, index, m, k.line);
  }
  for (std::size_t j : net.reactant_complexes())
    if (!kin[j]) throw ParseError(0, 0, "reactant complex " + net.format(net.complex(j)) + " has no kinetic complex");
  return GeneralizedNetwork(std::move(net), std::move(kin));
}

}  // namespace

Network parse_network(std::string_view text) {
  Parsed p = parse_lines(text);
  return build(p, false).base();
}

GeneralizedNetwork parse_generalized_network(std::string_view text) { return build(parse_lines(text), true); }

std::string serialize_network(const Network& net) {
  std::ostringstream os;
  if (!net.name().empty()) os << "network " << net.name() << "\n";
  os << "species";
  for (const auto& s : net.species()) os << " " << s.name;
  os << "\n";
  for (std::size_t i = 0; i < net.reaction_count(); ++i) os << net.format_reaction(i) << "\n";
  return os.str();
}

std::string serialize_generalized_network(const GeneralizedNetwork& g) {
  std::string out = serialize_network(g.base());
  if (g.is_mass_action()) return out;
  const auto& net = g.base();
  for (std::size_t j = 0; j < net.complex_count(); ++j)
    if (g.has_kinetic(j))
      out += "kinetic " + net.format(net.complex(j)) + " := " + net.format(g.kinetic_complex(j)) + "\n";
  return out;
}

IntVec parse_species_combination(std::string_view text, const Network& net, bool allow_signed) {
  RawComplex raw = parse_complex(text, 0, 1, allow_signed);
  IntVec v(net.species_count(), 0);
  for (const auto& t : raw.terms) {
    auto s = net.find_species(t.species);
    if (!s) throw ParseError(0, 0, "unknown species '" + t.species + "'");
    v[*s] += t.coeff;
  }
  return v;
}

std::map<std::string, Rational> parse_assignments(std::string_view text) {
  std::map<std::string, Rational> out;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, 1, "expected 'name = value'");
    std::string name(trim(line.substr(0, eq)));
    if (!is_identifier(name)) throw ParseError(line_no, 1, "invalid name '" + name + "'");
    Rational value;
    try {
      value = parse_rational(line.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError(line_no, eq + 2, e.message());
    }
    if (!out.emplace(name, value).second) throw ParseError(line_no, 1, "'" + name + "' assigned twice");
  }
  return out;
}

RatVec parse_state(std::string_view text, const Network& net) {
  auto values = parse_assignments(text);
  RatVec x(net.species_count());
  for (const auto& s : net.species()) {
    auto it = values.find(s.name);
    if (it == values.end()) throw ParseError(0, 0, "no value for species '" + s.name + "'");
    x[s.index] = it->second;
  }
  for (const auto& [name, v] : values)
    if (!net.find_species(name)) throw ParseError(0, 0, "unknown species '" + name + "'");
  return x;
}

}  // namespace crnt
