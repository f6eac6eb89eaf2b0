#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace shadowbound {

// Minimal JSON value tree for report output.  Objects keep insertion order so
// reports are stable byte-for-byte; doubles print with 17 significant digits
// so every finite value round-trips.
class Json {
public:
    enum class Type { Null, Bool, Int, Real, Str, Arr, Obj };

    Json() : type_(Type::Null) {}
    Json(bool b) : type_(Type::Bool), bool_(b) {}
    Json(int v) : type_(Type::Int), int_(v) {}
    Json(long long v) : type_(Type::Int), int_(v) {}
    Json(unsigned long long v) : type_(Type::Int), int_(static_cast<long long>(v)) {}
    Json(std::size_t v) : type_(Type::Int), int_(static_cast<long long>(v)) {}
    Json(double v) : type_(Type::Real), real_(v) {}
    Json(const char* s) : type_(Type::Str), str_(s) {}
    Json(std::string s) : type_(Type::Str), str_(std::move(s)) {}

    static Json array() {
        Json j;
        j.type_ = Type::Arr;
        return j;
    }
    static Json object() {
        Json j;
        j.type_ = Type::Obj;
        return j;
    }

    Type type() const { return type_; }

    void push_back(Json v) { arr_.push_back(std::move(v)); }

    Json& operator[](const std::string& key) {
        for (auto& [k, v] : obj_)
            if (k == key) return v;
        obj_.emplace_back(key, Json());
        return obj_.back().second;
    }

    std::string dump(int indent = 2) const {
        std::string out;
        write(out, indent, 0);
        return out;
    }

private:
    Type type_ = Type::Null;
    bool bool_ = false;
    long long int_ = 0;
    double real_ = 0.0;
    std::string str_;
    std::vector<Json> arr_;
    std::vector<std::pair<std::string, Json>> obj_;

    static void escape_to(std::string& out, const std::string& s) {
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

    void write(std::string& out, int indent, int depth) const {
        const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
        const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
        char buf[64];
        switch (type_) {
            case Type::Null: out += "null"; break;
            case Type::Bool: out += bool_ ? "true" : "false"; break;
            case Type::Int:
                std::snprintf(buf, sizeof buf, "%lld", int_);
                out += buf;
                break;
            case Type::Real:
                std::snprintf(buf, sizeof buf, "%.17g", real_);
                out += buf;
                break;
            case Type::Str: escape_to(out, str_); break;
            case Type::Arr:
                if (arr_.empty()) {
                    out += "[]";
                    break;
                }
                out += "[\n";
                for (std::size_t i = 0; i < arr_.size(); ++i) {
                    out += pad;
                    arr_[i].write(out, indent, depth + 1);
                    if (i + 1 < arr_.size()) out += ',';
                    out += '\n';
                }
                out += close_pad + "]";
                break;
            case Type::Obj:
                if (obj_.empty()) {
                    out += "{}";
                    break;
                }
                out += "{\n";
                for (std::size_t i = 0; i < obj_.size(); ++i) {
                    out += pad;
                    escape_to(out, obj_[i].first);
                    out += ": ";
                    obj_[i].second.write(out, indent, depth + 1);
                    if (i + 1 < obj_.size()) out += ',';
                    out += '\n';
                }
                out += close_pad + "}";
                break;
        }
    }
};

}  // namespace shadowbound
