#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qhb {

// JSON value for machine-readable reports.  Objects keep their keys sorted
// and only integers are allowed as numbers, so serialized reports are
// byte-identical across runs and thread counts by construction.
class ReportValue {
 public:
  ReportValue() : kind_(Kind::Null) {}
  ReportValue(bool b) : kind_(Kind::Boolean), boolean_(b) {}
  ReportValue(long long n) : kind_(Kind::Integer), integer_(n) {}
  ReportValue(int n) : ReportValue(static_cast<long long>(n)) {}
  ReportValue(std::string s) : kind_(Kind::String), string_(std::move(s)) {}
  ReportValue(const char* s) : ReportValue(std::string(s)) {}

  static ReportValue object() {
    ReportValue v;
    v.kind_ = Kind::Object;
    return v;
  }
  static ReportValue array() {
    ReportValue v;
    v.kind_ = Kind::Array;
    return v;
  }

  bool is_object() const { return kind_ == Kind::Object; }
  bool is_array() const { return kind_ == Kind::Array; }

  ReportValue& operator[](const std::string& key);
  void push_back(ReportValue v);

  // Serializes with 2-space indentation, sorted keys, LF newlines.
  std::string dump() const;

 private:
  enum class Kind { Null, Boolean, Integer, String, Array, Object };
  Kind kind_;
  bool boolean_ = false;
  long long integer_ = 0;
  std::string string_;
  std::vector<ReportValue> items_;
  std::map<std::string, ReportValue> fields_;

  void write(std::string& out, int indent) const;
};

// {"command": ..., "inputDigest": ..., "payload": ...}
ReportValue make_report(const std::string& command, const std::string& input_digest,
                        ReportValue payload);

// SHA-256 as a lowercase hex string.
std::string sha256_hex(std::string_view data);

}  // namespace qhb
