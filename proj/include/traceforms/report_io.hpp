#pragma once

#include <cstdint>
#include <cstdio>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace tf {

// Fixed 12-significant-digit float formatting; keeps re-runs byte-identical.
inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Minimal streaming JSON writer with explicit key order and fmt_double
// numbers. Output is fully determined by the sequence of calls.
class JsonWriter {
public:
    std::string str() const { return out_.str(); }

    JsonWriter& begin_object() {
        sep();
        out_ << "{";
        fresh_ = true;
        return *this;
    }
    JsonWriter& end_object() {
        out_ << "}";
        fresh_ = false;
        return *this;
    }
    JsonWriter& begin_array() {
        sep();
        out_ << "[";
        fresh_ = true;
        return *this;
    }
    JsonWriter& end_array() {
        out_ << "]";
        fresh_ = false;
        return *this;
    }
    JsonWriter& key(const std::string& k) {
        sep();
        out_ << '"' << escape(k) << "\":";
        fresh_ = true;
        return *this;
    }
    JsonWriter& value(double v) {
        sep();
        out_ << fmt_double(v);
        return *this;
    }
    JsonWriter& value(std::int64_t v) {
        sep();
        out_ << v;
        return *this;
    }
    JsonWriter& value(std::uint64_t v) {
        sep();
        out_ << v;
        return *this;
    }
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(bool v) {
        sep();
        out_ << (v ? "true" : "false");
        return *this;
    }
    JsonWriter& value(const std::string& v) {
        sep();
        out_ << '"' << escape(v) << '"';
        return *this;
    }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    // Pre-serialized JSON inserted verbatim (e.g. an echoed config document).
    JsonWriter& raw(const std::string& json) {
        sep();
        out_ << json;
        return *this;
    }

    template <class T>
    JsonWriter& kv(const std::string& k, const T& v) {
        key(k);
        return value(v);
    }

    template <class T>
    JsonWriter& array(const std::string& k, std::span<const T> vs) {
        key(k);
        begin_array();
        for (const auto& v : vs) value(v);
        return end_array();
    }

private:
    void sep() {
        if (fresh_)
            fresh_ = false;
        else
            out_ << ",";
    }
    static std::string escape(const std::string& s) {
        std::string r;
        for (char c : s) {
            if (c == '"' || c == '\\') {
                r.push_back('\\');
                r.push_back(c);
            } else if (c == '\n') {
                r += "\\n";
            } else {
                r.push_back(c);
            }
        }
        return r;
    }

    std::ostringstream out_;
    bool fresh_ = true;
};

void write_file(const std::string& path, const std::string& content);

// Histogram bars plus the Sato-Tate density polyline, as a self-contained SVG.
std::string histogram_svg(std::span<const std::size_t> bins, std::size_t total);

}  // namespace tf
