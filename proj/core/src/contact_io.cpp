#include "ttc/contact_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ttc::io {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

VertexId LabelTable::intern(std::string_view label) {
  std::string key(label);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<VertexId>(labels_.size());
  labels_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<VertexId> LabelTable::find(std::string_view label) const {
  if (auto it = ids_.find(std::string(label)); it != ids_.end()) return it->second;
  return std::nullopt;
}

std::optional<Timestamp> parse_timestamp(std::string_view token) {
  if (token.empty()) return std::nullopt;
  Timestamp value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value > kMaxTimestamp) return std::nullopt;
  return value;
}

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream stream{std::string(line)};
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

ContactFile parse_contacts(std::istream& in, const std::string& source_name) {
  ContactFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError(source_name, line_no, "expected `FROM TO TIME`, got " +
                                                 std::to_string(tokens.size()) + " fields");
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(source_name, line_no, "contact endpoints must differ (" + tokens[0] + ")");
    }
    const auto time = parse_timestamp(tokens[2]);
    if (!time) {
      throw ParseError(source_name, line_no, "TIME must be a non-negative integer, got `" +
                                                 tokens[2] + "`");
    }
    const VertexId from = file.labels.intern(tokens[0]);
    const VertexId to = file.labels.intern(tokens[1]);
    file.contacts.push_back({from, to, *time});
  }
  return file;
}

ContactFile parse_contact_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open contact file `" + path + "`");
  return parse_contacts(in, path);
}

void write_contacts(std::ostream& out, const std::vector<Contact>& contacts,
                    const LabelTable& labels) {
  for (const Contact& c : contacts) {
    out << labels.label(c.from) << ' ' << labels.label(c.to) << ' ' << c.time << '\n';
  }
}

}  // namespace ttc::io
