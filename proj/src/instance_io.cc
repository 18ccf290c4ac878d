#include "stablewelfare/instance_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stablewelfare/error.h"

namespace stablewelfare {
namespace {

using nlohmann::json;

int LineOfOffset(std::string_view text, size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the first occurrence of "key", or 0 if absent.
int LineOfKey(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const size_t pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : LineOfOffset(text, pos);
}

[[noreturn]] void FieldError(std::string_view text, std::string_view key,
                             const std::string& field, const std::string& what) {
  std::string message;
  if (const int line = LineOfKey(text, key); line > 0) {
    message = "line " + std::to_string(line) + ", ";
  }
  message += "field " + field + ": " + what;
  throw Error(ErrorCode::kParseError, message);
}

Matrix ReadMatrix(const json& doc, std::string_view text, const char* key, int n) {
  if (!doc.contains(key)) FieldError(text, key, key, "missing");
  const json& rows = doc.at(key);
  if (!rows.is_array()) FieldError(text, key, key, "expected an array of rows");
  if (static_cast<int>(rows.size()) != n) {
    FieldError(text, key, key,
               "expected " + std::to_string(n) + " rows, found " +
                   std::to_string(rows.size()));
  }
  Matrix out(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    const std::string row_name = std::string(key) + "[" + std::to_string(i) + "]";
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      FieldError(text, key, row_name,
                 "expected an array of " + std::to_string(n) + " numbers");
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        FieldError(text, key, row_name + "[" + std::to_string(j) + "]",
                   "expected a number");
      }
      out[i][j] = row[j].get<double>();
    }
  }
  return out;
}

}  // namespace

UtilityProfile ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(LineOfOffset(text, e.byte == 0 ? 0 : e.byte - 1)) +
                    ": malformed JSON");
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "expected a JSON object");
  if (!doc.contains("n")) FieldError(text, "n", "n", "missing");
  const json& n_field = doc.at("n");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    FieldError(text, "n", "n", "expected a positive integer");
  }
  const int n = static_cast<int>(n_field.get<long long>());
  Matrix agent = ReadMatrix(doc, text, "agent_utilities", n);
  Matrix arm = ReadMatrix(doc, text, "arm_utilities", n);
  return ValidateProfile(agent, arm);
}

std::string SerializeInstance(const UtilityProfile& profile) {
  // One row per line keeps fixtures diffable.
  auto rows = [](const Matrix& m) {
    std::string s = "[\n";
    for (size_t i = 0; i < m.size(); ++i) {
      s += "    " + json(m[i]).dump();
      s += i + 1 < m.size() ? ",\n" : "\n";
    }
    return s + "  ]";
  };
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(profile.n()) + ",\n";
  out += "  \"agent_utilities\": " + rows(profile.agent_matrix()) + ",\n";
  out += "  \"arm_utilities\": " + rows(profile.arm_matrix()) + "\n";
  return out + "}\n";
}

UtilityProfile ReadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteInstance(const UtilityProfile& profile, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << SerializeInstance(profile);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace stablewelfare
