#include "daisy/family_io.hpp"

#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "daisy/errors.hpp"

namespace daisy {
namespace {

unsigned parse_unsigned(const std::string& token, const char* what) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &used);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("expected a non-negative integer for ") + what + ", got '" + token + "'");
  }
  if (used != token.size() || token.front() == '-')
    throw InvalidInput(std::string("expected a non-negative integer for ") + what + ", got '" + token + "'");
  return static_cast<unsigned>(value);
}

}  // namespace

SetFamily read_family_text(std::istream& in) {
  std::string line;
  unsigned n = 0;
  unsigned r = 0;
  bool header = false;
  std::vector<std::vector<Element>> sets;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!header) {
      if (tokens.size() != 2) throw InvalidInput("family header must be 'n r'");
      n = parse_unsigned(tokens[0], "n");
      r = parse_unsigned(tokens[1], "r");
      header = true;
      continue;
    }
    std::vector<Element> set;
    for (const auto& tok : tokens) set.push_back(parse_unsigned(tok, "set element"));
    sets.push_back(std::move(set));
  }
  if (!header) throw InvalidInput("empty family file");
  return SetFamily::from_sets(n, r, sets);
}

void write_family_text(std::ostream& out, const SetFamily& f) {
  out << f.n() << ' ' << f.r() << '\n';
  for (const auto& s : f.members()) {
    bool first = true;
    for (Element e : s.elements()) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

SetFamily read_family_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    const auto n = doc.at("n").get<unsigned>();
    const auto r = doc.at("r").get<unsigned>();
    const auto sets = doc.at("sets").get<std::vector<std::vector<Element>>>();
    return SetFamily::from_sets(n, r, sets);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed family JSON: ") + e.what());
  }
}

void write_family_json(std::ostream& out, const SetFamily& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& s : f.members()) sets.push_back(std::vector<Element>(s.elements().begin(), s.elements().end()));
  nlohmann::json doc = {{"n", f.n()}, {"r", f.r()}, {"sets", sets}};
  out << doc.dump() << '\n';
}

SetFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open family file " + path.string());
  in >> std::ws;
  if (in.peek() == '{') return read_family_json(in);
  return read_family_text(in);
}

}  // namespace daisy
