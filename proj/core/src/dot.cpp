#include "wdrkit/dot.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "wdrkit/error.hpp"

namespace wdrkit {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void write_header(std::ostringstream& os, const Digraph& d, const std::vector<std::string>& comments) {
  os << "digraph \"" << escape(d.spec().empty() ? std::string("G") : d.spec()) << "\" {\n";
  for (const auto& c : comments) os << "// " << c << "\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    os << v << " [label=\"" << escape(d.label(v)) << "\"]\n";
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == ';')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<Vertex> leading_id(std::string_view& s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return static_cast<Vertex>(value);
}

// Extracts the quoted label="..." value, if any.
std::optional<std::string> label_attr(std::string_view s) {
  const auto pos = s.find("label=\"");
  if (pos == std::string_view::npos) return std::nullopt;
  std::string out;
  for (std::size_t i = pos + 7; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      out.push_back(s[++i]);
    } else if (s[i] == '"') {
      return out;
    } else {
      out.push_back(s[i]);
    }
  }
  throw Error(ErrorCode::kParse, "unterminated label");
}

}  // namespace

std::string to_dot(const Digraph& d, const DistancePairMatrix& m, const std::vector<std::string>& comments) {
  std::ostringstream os;
  write_header(os, d, comments);
  for (const Arc& a : d.arcs()) {
    os << a.tail << " -> " << a.head << " [label=\"" << arc_type(d, m, a).to_string() << "\"]\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot_untyped(const Digraph& d, const std::vector<std::string>& comments) {
  std::ostringstream os;
  write_header(os, d, comments);
  for (const Arc& a : d.arcs()) os << a.tail << " -> " << a.head << "\n";
  os << "}\n";
  return os.str();
}

Digraph parse_dot(std::string_view text) {
  std::map<Vertex, std::string> labels;
  std::vector<Arc> arcs;
  std::string spec;
  bool opened = false;
  std::size_t line_no = 0;
  std::size_t max_id = 0;
  bool any_vertex = false;

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.starts_with("//") || line.starts_with("#")) continue;
    if (!opened) {
      if (!line.starts_with("digraph")) throw Error(ErrorCode::kParse, "expected 'digraph' header");
      if (auto name = line.find('"'); name != std::string_view::npos) {
        const auto end = line.rfind('"');
        if (end > name) spec = std::string(line.substr(name + 1, end - name - 1));
        if (spec == "G") spec.clear();
      }
      opened = true;
      continue;
    }
    if (line == "}") break;
    std::string_view rest = line;
    auto tail = leading_id(rest);
    if (!tail) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected vertex id");
    rest = trim(rest);
    any_vertex = true;
    max_id = std::max<std::size_t>(max_id, *tail);
    if (rest.starts_with("->")) {
      rest.remove_prefix(2);
      rest = trim(rest);
      auto head = leading_id(rest);
      if (!head) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected arc head");
      max_id = std::max<std::size_t>(max_id, *head);
      arcs.push_back({*tail, *head});
    } else if (auto label = label_attr(rest)) {
      labels[*tail] = *label;
    }
  }
  if (!opened) throw Error(ErrorCode::kParse, "empty DOT input");
  if (!any_vertex) throw Error(ErrorCode::kParse, "DOT input has no vertices");

  const std::size_t n = max_id + 1;
  std::vector<std::string> label_list;
  if (labels.size() == n) {
    for (auto& [v, l] : labels) label_list.push_back(std::move(l));
  }
  return Digraph::from_arcs(n, arcs).with_metadata(std::move(label_list), std::move(spec));
}

}  // namespace wdrkit
