#ifndef TTC_QUERY_HPP
#define TTC_QUERY_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttc/contact_io.hpp"
#include "ttc/timed_transitive_closure.hpp"

namespace ttc::io {

// Exit codes shared by the CLI and the script runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitUsage = 2;

// Bad query text, unknown label, invalid interval, or missing vertices.
class QueryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QueryKind { AddContact, CanReach, IsConnected, Reconstruct, Matrix, Tuples };
enum class Expectation { None, True, False };

// One parsed query line, e.g. `can-reach a d 2 5` or
// `assert_false reconstruct b a`. Omitted t1/t2 mean the full lifetime.
struct Query {
  QueryKind kind = QueryKind::CanReach;
  Expectation expect = Expectation::None;
  std::vector<std::string> labels;
  std::optional<Timestamp> t1;
  std::optional<Timestamp> t2;
  std::optional<Timestamp> time;  // add-contact only
};

// Throws QueryError on malformed input.
[[nodiscard]] Query parse_query(const std::vector<std::string>& tokens);

// Contacts, labels, and the closure built from them. The closure is absent
// when the contact file names no vertices.
struct Workspace {
  LabelTable labels;
  std::vector<Contact> contacts;
  std::optional<TimedTransitiveClosure> closure;

  [[nodiscard]] static Workspace load(ContactFile file, Timestamp latency);
};

struct QueryResult {
  std::string output;  // newline-terminated
  bool assertion_failed = false;
};

// Throws QueryError on unknown labels, t1 > t2, or an empty workspace.
[[nodiscard]] QueryResult run_query(Workspace& ws, const Query& query);

// Runs one query per non-blank line. Results go to `out`; failures and errors
// to `err`. Returns kExitOk, kExitAssertionFailed (after running every line),
// or kExitUsage (stopping at the first bad line).
int run_script(Workspace& ws, std::istream& script, const std::string& script_name,
               std::ostream& out, std::ostream& err);

}  // namespace ttc::io

#endif  // TTC_QUERY_HPP
