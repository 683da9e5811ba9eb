#ifndef TTC_CONTACT_IO_HPP
#define TTC_CONTACT_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ttc/types.hpp"

namespace ttc::io {

// Raised for malformed input; the message names the source and line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Interns string labels to dense vertex ids in first-appearance order.
class LabelTable {
 public:
  VertexId intern(std::string_view label);
  [[nodiscard]] std::optional<VertexId> find(std::string_view label) const;
  [[nodiscard]] const std::string& label(VertexId id) const { return labels_.at(id); }
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
};

struct ContactFile {
  std::vector<Contact> contacts;  // in file order
  LabelTable labels;
};

// Parses `FROM TO TIME` lines. `#` starts a comment, blank lines are skipped.
[[nodiscard]] ContactFile parse_contacts(std::istream& in, const std::string& source_name);
// Throws std::runtime_error if the file cannot be opened.
[[nodiscard]] ContactFile parse_contact_file(const std::string& path);

// Canonical form: one `FROM TO TIME` line per contact.
void write_contacts(std::ostream& out, const std::vector<Contact>& contacts,
                    const LabelTable& labels);

// Parses a non-negative integer no larger than kMaxTimestamp.
[[nodiscard]] std::optional<Timestamp> parse_timestamp(std::string_view token);

// Whitespace tokenizer with `#` comments stripped.
[[nodiscard]] std::vector<std::string> tokenize(std::string_view line);

}  // namespace ttc::io

#endif  // TTC_CONTACT_IO_HPP
