#include "modinv/cli/format.hpp"

#include "modinv/series.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace modinv::cli {

namespace {

using Cell = std::optional<std::string>;
using Row = std::pair<std::string, std::vector<Cell>>;

Cell cell(const std::optional<Int>& v) {
  if (!v) return std::nullopt;
  return to_string(*v);
}

std::vector<Row> table_rows(const DayanTrace& trace) {
  const auto column = [&](const std::function<Cell(const DayanStep&)>& get) {
    std::vector<Cell> cells;
    for (const DayanStep& step : trace.steps) cells.push_back(get(step));
    return cells;
  };
  std::vector<Row> rows;
  rows.emplace_back("i", column([](const DayanStep& s) { return Cell(std::to_string(s.index)); }));
  rows.emplace_back("r", column([](const DayanStep& s) { return Cell(to_string(s.r)); }));
  rows.emplace_back("gamma", column([](const DayanStep& s) { return cell(s.gamma); }));
  if (trace.strategy.kind() != SignStrategy::Kind::AllPlus) {
    rows.emplace_back("s", column([](const DayanStep& s) {
                        return s.s ? Cell(*s.s > 0 ? "1" : "-1") : std::nullopt;
                      }));
  }
  rows.emplace_back("c", column([](const DayanStep& s) { return cell(s.c); }));
  rows.emplace_back("beta", column([](const DayanStep& s) { return cell(s.beta); }));
  rows.emplace_back("f", column([](const DayanStep& s) { return cell(s.f); }));
  return rows;
}

nlohmann::json int_or_null(const std::optional<Int>& v) {
  if (!v) return nullptr;
  return to_string(*v);
}

Int json_int(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_string()) throw ParseError(std::string("trace json: '") + key + "' must be a string");
  try {
    return parse_int(it->get<std::string>());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("trace json: '") + key + "': " + e.what());
  }
}

std::optional<Int> json_opt_int(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return json_int(doc, key);
}

}  // namespace

std::string format_trace_tsv(const DayanTrace& trace) {
  std::string out;
  for (const auto& [label, cells] : table_rows(trace)) {
    out += label;
    for (const Cell& c : cells) {
      out += '\t';
      if (c) out += *c;
    }
    out += '\n';
  }
  return out;
}

std::string format_trace_markdown(const DayanTrace& trace) {
  const auto rows = table_rows(trace);
  std::string out;
  bool header = true;
  for (const auto& [label, cells] : rows) {
    out += "| " + label + " |";
    for (const Cell& c : cells) out += " " + c.value_or("") + " |";
    out += '\n';
    if (header) {
      out += "|---|";
      for (std::size_t k = 0; k < cells.size(); ++k) out += "---:|";
      out += '\n';
      header = false;
    }
  }
  return out;
}

nlohmann::json trace_to_json(const DayanTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const DayanStep& s : trace.steps) {
    steps.push_back({
        {"i", s.index},
        {"s", s.s ? nlohmann::json(*s.s) : nlohmann::json(nullptr)},
        {"r", to_string(s.r)},
        {"gamma", int_or_null(s.gamma)},
        {"c", int_or_null(s.c)},
        {"beta", int_or_null(s.beta)},
        {"f", int_or_null(s.f)},
    });
  }
  std::optional<Int> value;
  if (trace.solvable) value = ext_inverse_sum_f(trace);
  return {
      {"p", to_string(trace.p)},
      {"q", to_string(trace.q)},
      {"a", to_string(trace.a)},
      {"strategy", trace.strategy.name()},
      {"steps", std::move(steps)},
      {"termination", std::string(to_string(trace.termination))},
      {"gcd", int_or_null(trace.gcd)},
      {"sum_index", trace.sum_index},
      {"solvable", trace.solvable},
      {"value", int_or_null(value)},
  };
}

DayanTrace trace_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("trace json: expected an object");
  DayanTrace trace;
  try {
    trace.p = json_int(doc, "p");
    trace.q = json_int(doc, "q");
    trace.a = json_int(doc, "a");
    trace.strategy = SignStrategy::parse(doc.at("strategy").get<std::string>());
    trace.termination = termination_from_string(doc.at("termination").get<std::string>());
    trace.gcd = json_opt_int(doc, "gcd");
    trace.sum_index = doc.at("sum_index").get<long>();
    trace.solvable = doc.at("solvable").get<bool>();
    for (const auto& s : doc.at("steps")) {
      DayanStep step;
      step.index = s.at("i").get<long>();
      step.r = json_int(s, "r");
      if (!s.at("s").is_null()) step.s = s.at("s").get<int>();
      step.gamma = json_opt_int(s, "gamma");
      step.c = json_opt_int(s, "c");
      step.beta = json_opt_int(s, "beta");
      step.f = json_opt_int(s, "f");
      trace.steps.push_back(std::move(step));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("trace json: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("trace json: ") + e.what());
  }
  return trace;
}

std::vector<Congruence> parse_congruences(std::istream& in) {
  std::vector<Congruence> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string residue;
    std::string keyword;
    std::string modulus;
    std::string extra;
    const auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (!(fields >> residue >> keyword >> modulus) || keyword != "mod" || (fields >> extra)) {
      throw ParseError(where() + "expected 'a mod m', got '" + line + "'");
    }
    try {
      out.emplace_back(parse_int(residue), parse_int(modulus));
    } catch (const PreconditionError& e) {
      throw ParseError(where() + e.what());
    }
  }
  return out;
}

FloatSeries float_series(const Int& p, const Int& q, int type, bool condensed) {
  const RemainderChain chain = remainder_chain(p, q, type == 1 ? +1 : -1);
  const auto r = [&](long i) { return static_cast<double>(chain.rem(i)); };
  const auto c = [&](long i) { return static_cast<double>(chain.quot(i)); };
  const double pd = static_cast<double>(p);
  const long n = chain.n();

  double value = 0.0;
  if (condensed) {
    double paired = 0.0;
    for (long i = 0; 2 * i + 1 <= n; ++i) paired += c(2 * i + 1) / (r(2 * i - 1) * r(2 * i + 1));
    const double tail = n % 2 == 0 ? pd / r(n - 1) : (type == 1 ? pd : 0.0);
    value = (type == 1 ? -pd : pd) * paired + tail;
  } else {
    double sum = 0.0;
    for (long i = 0; i <= n; ++i) {
      const double term = 1.0 / (r(i - 1) * r(i));
      sum += (type == 1 && i % 2 == 1) ? -term : term;
    }
    value = pd * sum;
    // Negative raw value means n was odd.
    if (type == 1 && value < 0) value += pd;
  }
  FloatSeries out;
  out.value = value;
  out.rounded = std::round(value);
  out.error = std::fabs(value - out.rounded);
  out.suspect = out.error > 0.25;
  return out;
}

}  // namespace modinv::cli
