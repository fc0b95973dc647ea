#include "records.hpp"

#include <cmath>
#include <cstdio>

namespace delaybounds::cli {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void escape_into(const std::string& s, std::string& out) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

}  // namespace

JsonValue JsonValue::number(double v) {
  JsonValue j;
  j.value_ = v;
  return j;
}

JsonValue JsonValue::integer(long long v) {
  JsonValue j;
  j.value_ = v;
  return j;
}

JsonValue JsonValue::boolean(bool v) {
  JsonValue j;
  j.value_ = v;
  return j;
}

JsonValue JsonValue::string(std::string s) {
  JsonValue j;
  j.value_ = std::move(s);
  return j;
}

JsonValue JsonValue::array() {
  JsonValue j;
  j.value_ = Array{};
  return j;
}

JsonValue JsonValue::object() {
  JsonValue j;
  j.value_ = Object{};
  return j;
}

JsonValue JsonValue::vector(const Vector& v) {
  JsonValue arr = array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(number(v(i)));
  return arr;
}

JsonValue JsonValue::matrix(const Matrix& m) {
  JsonValue rows = array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    JsonValue row = array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

JsonValue& JsonValue::push_back(JsonValue v) {
  std::get<Array>(value_).items.push_back(std::move(v));
  return *this;
}

JsonValue& JsonValue::set(std::string key, JsonValue v) {
  std::get<Object>(value_).fields.emplace_back(std::move(key), std::move(v));
  return *this;
}

std::string JsonValue::dump() const {
  std::string out;
  struct Visitor {
    std::string& out;
    void operator()(double v) const { out += format_double(v); }
    void operator()(long long v) const { out += std::to_string(v); }
    void operator()(bool v) const { out += v ? "true" : "false"; }
    void operator()(const std::string& v) const { escape_into(v, out); }
    void operator()(const Object& o) const {
      out.push_back('{');
      bool first = true;
      for (const auto& [k, v] : o.fields) {
        if (!first) out.push_back(',');
        first = false;
        escape_into(k, out);
        out.push_back(':');
        out += v.dump();
      }
      out.push_back('}');
    }
    void operator()(const Array& a) const {
      out.push_back('[');
      bool first = true;
      for (const auto& v : a.items) {
        if (!first) out.push_back(',');
        first = false;
        out += v.dump();
      }
      out.push_back(']');
    }
  };
  std::visit(Visitor{out}, value_);
  return out;
}

JsonValue suite_report_record(const SuiteReport& rep, bool with_timing) {
  JsonValue rec = JsonValue::object();
  rec.set("record", JsonValue::string("suite_report"));
  rec.set("schema", JsonValue::integer(1));
  rec.set("suite", JsonValue::string(rep.suite));
  rec.set("seed", JsonValue::integer(static_cast<long long>(rep.seed)));
  rec.set("n", JsonValue::integer(rep.n));
  rec.set("nu", JsonValue::integer(rep.nu));
  rec.set("kind", JsonValue::string(rep.kind));
  rec.set("trials", JsonValue::integer(rep.trials));
  rec.set("pass", JsonValue::boolean(rep.pass()));

  JsonValue failures = JsonValue::array();
  for (const Failure& f : rep.failures) {
    JsonValue item = JsonValue::object();
    item.set("trial", JsonValue::integer(f.trial));
    item.set("check", JsonValue::string(f.check));
    item.set("observed", JsonValue::number(f.observed));
    item.set("expected", JsonValue::number(f.expected));
    item.set("margin", JsonValue::number(f.margin));
    item.set("digest", JsonValue::string(f.digest));
    failures.push_back(std::move(item));
  }
  rec.set("failures", std::move(failures));

  JsonValue margins = JsonValue::object();
  for (const auto& [key, value] : rep.worst_margins) margins.set(key, JsonValue::number(value));
  rec.set("worst_margins", std::move(margins));

  if (with_timing) rec.set("wall_seconds", JsonValue::number(rep.wall_seconds));
  return rec;
}

}  // namespace delaybounds::cli
