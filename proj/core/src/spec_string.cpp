#include "wdrkit/spec_string.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "wdrkit/error.hpp"

namespace wdrkit {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw Error(ErrorCode::kParse, "expected integer in " + std::string(context) + ", got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// "a=1,b=2" -> {a:1, b:2}; every key in `required` must appear exactly once.
std::map<std::string, int> key_values(std::string_view body, std::initializer_list<std::string_view> required,
                                      std::string_view context) {
  std::map<std::string, int> out;
  for (auto item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::kParse, "expected key=value in " + std::string(context));
    std::string key(item.substr(0, eq));
    if (std::find(required.begin(), required.end(), key) == required.end()) {
      throw Error(ErrorCode::kParse, "unknown key '" + key + "' in " + std::string(context));
    }
    if (!out.emplace(key, parse_int(item.substr(eq + 1), context)).second) {
      throw Error(ErrorCode::kParse, "repeated key '" + key + "' in " + std::string(context));
    }
  }
  for (auto key : required) {
    if (!out.contains(std::string(key))) {
      throw Error(ErrorCode::kParse, "missing key '" + std::string(key) + "' in " + std::string(context));
    }
  }
  return out;
}

CayleySpec parse_cayley(std::string_view body) {
  CayleySpec spec;
  bool have_mods = false, have_set = false;
  for (auto part : split(body, ';')) {
    if (part.starts_with("mods=")) {
      for (auto tok : split(part.substr(5), ',')) spec.moduli.push_back(parse_int(tok, "cayley moduli"));
      have_mods = true;
    } else if (part.starts_with("set=")) {
      std::string_view rest = part.substr(4);
      while (!rest.empty()) {
        if (rest.front() != '(') throw Error(ErrorCode::kParse, "expected '(' in cayley connection set");
        const auto close = rest.find(')');
        if (close == std::string_view::npos) throw Error(ErrorCode::kParse, "unbalanced '(' in cayley connection set");
        GroupElement e;
        for (auto tok : split(rest.substr(1, close - 1), ',')) e.push_back(parse_int(tok, "cayley element"));
        spec.connection_set.push_back(std::move(e));
        rest.remove_prefix(close + 1);
      }
      have_set = true;
    } else {
      throw Error(ErrorCode::kParse, "unknown cayley field '" + std::string(part) + "'");
    }
  }
  if (!have_mods || !have_set) throw Error(ErrorCode::kParse, "cayley spec needs mods=... and set=...");
  return spec;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const std::string compact = strip_spaces(text);
  const std::string_view view = compact;
  const auto colon = view.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::kParse, "expected '<family>:<parameters>', got '" + compact + "'");
  const auto family = view.substr(0, colon);
  const auto body = view.substr(colon + 1);
  if (family == "gamma-g") {
    auto kv = key_values(body, {"g"}, "gamma-g");
    return GammaGSpec{kv.at("g")};
  }
  if (family == "gamma-qsk") {
    auto kv = key_values(body, {"q", "s", "k"}, "gamma-qsk");
    return GammaQskSpec{kv.at("q"), kv.at("s"), kv.at("k")};
  }
  if (family == "cayley") return parse_cayley(body);
  throw Error(ErrorCode::kParse, "unknown family '" + std::string(family) + "'");
}

Digraph build_family(const FamilySpec& spec) {
  struct Builder {
    Digraph operator()(const GammaGSpec& s) const { return gamma_g(s.g); }
    Digraph operator()(const GammaQskSpec& s) const { return gamma_qsk(GammaQskParams::make(s.q, s.s, s.k)); }
    Digraph operator()(const CayleySpec& s) const { return cayley(s); }
  };
  return std::visit(Builder{}, spec);
}

GammaQskSpec parse_qsk_arguments(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact.find(':') != std::string::npos) {
    auto spec = parse_family_spec(compact);
    if (auto* qsk = std::get_if<GammaQskSpec>(&spec)) return *qsk;
    throw Error(ErrorCode::kParse, "expected a gamma-qsk spec");
  }
  auto kv = key_values(compact, {"q", "s", "k"}, "q,s,k parameters");
  return {kv.at("q"), kv.at("s"), kv.at("k")};
}

}  // namespace wdrkit
