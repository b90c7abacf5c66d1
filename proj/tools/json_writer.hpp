#ifndef ULTRA_TOOLS_JSON_WRITER_HPP
#define ULTRA_TOOLS_JSON_WRITER_HPP

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ultra::cli {

// Hand-rolled writer so the output contract is under our control: member
// order is insertion order, floating-point values are printed with 17
// significant digits, and identical invocations produce identical bytes.
class Json {
public:
    static Json object() { return Json(Kind::object); }
    static Json array() { return Json(Kind::array); }
    static Json str(std::string s) {
        Json j(Kind::string);
        j.str_ = std::move(s);
        return j;
    }
    static Json num(double v) {
        Json j(Kind::number);
        j.num_ = v;
        return j;
    }
    static Json integer(long long v) {
        Json j(Kind::integral);
        j.int_ = v;
        return j;
    }
    static Json boolean(bool v) {
        Json j(Kind::boolean);
        j.bool_ = v;
        return j;
    }
    static Json null() { return Json(Kind::null); }

    Json& add(const std::string& key, Json value) {
        members_.emplace_back(key, std::move(value));
        return *this;
    }
    Json& push(Json value) {
        items_.push_back(std::move(value));
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    enum class Kind { object, array, string, number, integral, boolean, null };

    explicit Json(Kind k) : kind_(k) {}

    static void escape(const std::string& s, std::string& out) {
        out += '"';
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
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        switch (kind_) {
            case Kind::object: {
                out += '{';
                bool first = true;
                for (const auto& [k, v] : members_) {
                    if (!first) out += ',';
                    first = false;
                    escape(k, out);
                    out += ':';
                    v.write(out);
                }
                out += '}';
                break;
            }
            case Kind::array: {
                out += '[';
                bool first = true;
                for (const Json& v : items_) {
                    if (!first) out += ',';
                    first = false;
                    v.write(out);
                }
                out += ']';
                break;
            }
            case Kind::string: escape(str_, out); break;
            case Kind::number: {
                if (num_ != num_) {
                    out += "null";
                    break;
                }
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", num_);
                out += buf;
                break;
            }
            case Kind::integral: out += std::to_string(int_); break;
            case Kind::boolean: out += bool_ ? "true" : "false"; break;
            case Kind::null: out += "null"; break;
        }
    }

    Kind kind_;
    std::string str_;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
    std::vector<std::pair<std::string, Json>> members_;
    std::vector<Json> items_;
};

} // namespace ultra::cli

#endif
