#include "ttc/query.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ttc::io {

namespace {

Timestamp timestamp_arg(const std::string& token) {
  auto t = parse_timestamp(token);
  if (!t) throw QueryError("expected a non-negative integer timestamp, got `" + token + "`");
  return *t;
}

VertexId resolve(const Workspace& ws, const std::string& label) {
  auto id = ws.labels.find(label);
  if (!id) throw QueryError("unknown label `" + label + "`");
  return *id;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

void require_window(const Query& q) {
  if (q.t1 && q.t2 && *q.t1 > *q.t2) {
    throw QueryError("invalid interval: t1 (" + std::to_string(*q.t1) + ") exceeds t2 (" +
                     std::to_string(*q.t2) + ")");
  }
}

}  // namespace

Query parse_query(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw QueryError("empty query");
  Query q;
  std::size_t pos = 0;
  if (tokens[0] == "assert_true" || tokens[0] == "assert_false") {
    q.expect = tokens[0] == "assert_true" ? Expectation::True : Expectation::False;
    ++pos;
    if (pos == tokens.size()) throw QueryError("assertion without a query");
  }

  const std::string& verb = tokens[pos++];
  std::size_t label_count = 0;
  if (verb == "can-reach") {
    q.kind = QueryKind::CanReach;
    label_count = 2;
  } else if (verb == "is-connected") {
    q.kind = QueryKind::IsConnected;
  } else if (verb == "reconstruct") {
    q.kind = QueryKind::Reconstruct;
    label_count = 2;
  } else if (verb == "matrix") {
    q.kind = QueryKind::Matrix;
  } else if (verb == "tuples") {
    q.kind = QueryKind::Tuples;
  } else if (verb == "add-contact") {
    q.kind = QueryKind::AddContact;
    label_count = 2;
  } else {
    throw QueryError("unknown query `" + verb + "`");
  }

  if (q.expect != Expectation::None &&
      (q.kind == QueryKind::Matrix || q.kind == QueryKind::Tuples ||
       q.kind == QueryKind::AddContact)) {
    throw QueryError("`" + verb + "` cannot be asserted");
  }

  const std::size_t rest = tokens.size() - pos;
  if (rest < label_count) throw QueryError("`" + verb + "` needs " + std::to_string(label_count) + " labels");
  for (std::size_t i = 0; i < label_count; ++i) q.labels.push_back(tokens[pos++]);

  const std::size_t numbers = tokens.size() - pos;
  if (q.kind == QueryKind::AddContact) {
    if (numbers != 1) throw QueryError("usage: add-contact FROM TO TIME");
    q.time = timestamp_arg(tokens[pos]);
  } else if (q.kind == QueryKind::Tuples) {
    if (numbers != 0) throw QueryError("usage: tuples");
  } else if (numbers == 2) {
    q.t1 = timestamp_arg(tokens[pos]);
    q.t2 = timestamp_arg(tokens[pos + 1]);
  } else if (numbers != 0) {
    throw QueryError("`" + verb + "` takes either no interval or `t1 t2`");
  }
  require_window(q);
  return q;
}

Workspace Workspace::load(ContactFile file, Timestamp latency) {
  Workspace ws;
  ws.labels = std::move(file.labels);
  ws.contacts = std::move(file.contacts);
  if (ws.labels.size() > 0) {
    ws.closure.emplace(TtcConfig{ws.labels.size(), latency});
    for (const Contact& c : ws.contacts) ws.closure->add_contact(c);
  }
  return ws;
}

QueryResult run_query(Workspace& ws, const Query& q) {
  if (!ws.closure) throw QueryError("no vertices: the contact file is empty");
  require_window(q);
  TimedTransitiveClosure& closure = *ws.closure;
  const Timestamp t1 = q.t1.value_or(0);
  const Timestamp t2 = q.t2.value_or(std::numeric_limits<Timestamp>::max());
  const bool full = !q.t1;

  std::ostringstream out;
  std::optional<bool> verdict;
  switch (q.kind) {
    case QueryKind::AddContact: {
      const VertexId u = resolve(ws, q.labels[0]);
      const VertexId v = resolve(ws, q.labels[1]);
      if (u == v) throw QueryError("contact endpoints must differ");
      closure.add_contact(u, v, *q.time);
      ws.contacts.push_back({u, v, *q.time});
      out << "ok\n";
      break;
    }
    case QueryKind::CanReach: {
      const VertexId u = resolve(ws, q.labels[0]);
      const VertexId v = resolve(ws, q.labels[1]);
      verdict = full ? closure.can_reach(u, v) : closure.can_reach(u, v, t1, t2);
      out << bool_text(*verdict) << '\n';
      break;
    }
    case QueryKind::IsConnected: {
      verdict = full ? closure.is_connected() : closure.is_connected(t1, t2);
      out << bool_text(*verdict) << '\n';
      break;
    }
    case QueryKind::Reconstruct: {
      const VertexId u = resolve(ws, q.labels[0]);
      const VertexId v = resolve(ws, q.labels[1]);
      if (u == v) throw QueryError("reconstruct needs distinct endpoints");
      const auto journey = closure.reconstruct_journey(u, v, t1, t2);
      verdict = journey.has_value();
      if (!journey) {
        out << "none\n";
        break;
      }
      for (const Contact& c : journey->contacts) {
        out << ws.labels.label(c.from) << ' ' << ws.labels.label(c.to) << ' ' << c.time << '\n';
      }
      out << "departure=" << journey->departure() << " arrival=" << journey->arrival() << '\n';
      break;
    }
    case QueryKind::Matrix: {
      const auto n = static_cast<VertexId>(closure.vertex_count());
      for (VertexId u = 0; u < n; ++u) {
        out << ws.labels.label(u);
        for (VertexId v = 0; v < n; ++v) {
          const bool reach = full ? closure.can_reach(u, v) : closure.can_reach(u, v, t1, t2);
          out << ' ' << (reach ? 1 : 0);
        }
        out << '\n';
      }
      break;
    }
    case QueryKind::Tuples: {
      const auto n = static_cast<VertexId>(closure.vertex_count());
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
          closure.tree(u, v).for_each([&](const TreeEntry& e) {
            out << ws.labels.label(u) << ' ' << ws.labels.label(v) << " [" << e.interval.start
                << ',' << e.interval.end << "] " << ws.labels.label(e.successor) << '\n';
          });
        }
      }
      break;
    }
  }

  QueryResult result{out.str(), false};
  if (q.expect != Expectation::None && verdict) {
    result.assertion_failed = *verdict != (q.expect == Expectation::True);
  }
  return result;
}

int run_script(Workspace& ws, std::istream& script, const std::string& script_name,
               std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(script, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    try {
      const QueryResult result = run_query(ws, parse_query(tokens));
      out << result.output;
      if (result.assertion_failed) {
        err << script_name << ':' << line_no << ": assertion failed: " << line << '\n';
        status = kExitAssertionFailed;
      }
    } catch (const std::exception& e) {
      err << script_name << ':' << line_no << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace ttc::io
