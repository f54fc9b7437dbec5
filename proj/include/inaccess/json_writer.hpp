#pragma once

#include <string>
#include <vector>

#include "inaccess/numeric.hpp"

namespace inaccess {

// Minimal JSON emitter. Numbers are printed with the shortest decimal form
// that round-trips, which nlohmann::json does not do; inputs are still parsed
// with nlohmann::json where the CLI accepts files.
class JsonWriter {
public:
    std::string str() const { return out_; }

    JsonWriter& begin_object() { sep(); out_ += '{'; fresh_ = true; return *this; }
    JsonWriter& end_object() { out_ += '}'; fresh_ = false; return *this; }
    JsonWriter& begin_array() { sep(); out_ += '['; fresh_ = true; return *this; }
    JsonWriter& end_array() { out_ += ']'; fresh_ = false; return *this; }

    JsonWriter& key(const std::string& k) {
        sep();
        append_string(k);
        out_ += ':';
        fresh_ = true;
        return *this;
    }

    JsonWriter& value(double v) { sep(); out_ += format_double(v); return *this; }
    JsonWriter& value(int v) { sep(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(long long v) { sep(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(std::size_t v) { sep(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(bool v) { sep(); out_ += v ? "true" : "false"; return *this; }
    JsonWriter& value(const std::string& v) { sep(); append_string(v); return *this; }
    JsonWriter& value(const char* v) { return value(std::string(v)); }

    JsonWriter& value(const std::vector<double>& v) {
        begin_array();
        for (double x : v) value(x);
        return end_array();
    }
    JsonWriter& value(const std::vector<int>& v) {
        begin_array();
        for (int x : v) value(x);
        return end_array();
    }

private:
    void sep() {
        if (!fresh_ && !out_.empty()) {
            const char c = out_.back();
            if (c != '{' && c != '[' && c != ':') out_ += ',';
        }
        fresh_ = false;
    }

    void append_string(const std::string& s) {
        out_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                default: out_ += c;
            }
        }
        out_ += '"';
    }

    std::string out_;
    bool fresh_ = true;
};

}  // namespace inaccess
