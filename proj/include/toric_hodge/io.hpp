// Problem documents and result documents: an exact-integer JSON subset,
// schema checks with field paths, and text renderings of tables.
#pragma once

#include "toric_hodge/dk_hodge.hpp"
#include "toric_hodge/wps.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

namespace toric::io {

/// Malformed input: syntax errors carry line and column, schema errors the
/// offending field path. Maps to exit status 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON value restricted to what the documents need: every number is an
/// exact integer and objects keep their key order.
struct Value {
    enum class Type { null, boolean, integer, string, array, object };
    Type type = Type::null;
    bool flag = false;
    Int number;
    std::string text;
    std::vector<Value> items;
    std::vector<std::pair<std::string, Value>> members;

    static Value of(const Int& x) {
        Value v;
        v.type = Type::integer;
        v.number = x;
        return v;
    }
    static Value of(const std::string& s) {
        Value v;
        v.type = Type::string;
        v.text = s;
        return v;
    }
    static Value of(bool b) {
        Value v;
        v.type = Type::boolean;
        v.flag = b;
        return v;
    }
    static Value array() {
        Value v;
        v.type = Type::array;
        return v;
    }
    static Value object() {
        Value v;
        v.type = Type::object;
        return v;
    }

    const Value* find(const std::string& key) const {
        for (const auto& [k, v] : members)
            if (k == key) return &v;
        return nullptr;
    }
    Value& set(const std::string& key, Value v) {
        members.emplace_back(key, std::move(v));
        return members.back().second;
    }
    void push(Value v) { items.push_back(std::move(v)); }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t pos) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

class ValueBuilder : public nlohmann::json_sax<nlohmann::json> {
public:
    explicit ValueBuilder(const std::string& input) : input_(input) {}

    bool null() override { return put(Value()); }
    bool boolean(bool b) override { return put(Value::of(b)); }
    bool number_integer(number_integer_t x) override { return put(Value::of(Int(x))); }
    bool number_unsigned(number_unsigned_t x) override { return put(Value::of(Int(x))); }
    bool number_float(number_float_t, const string_t& raw) override {
        // integers beyond 64 bits arrive here with their source text
        if (!is_integer_literal(raw)) {
            error_ = "non-integer number " + raw + " (only integers are allowed)";
            return false;
        }
        return put(Value::of(Int(raw)));
    }
    bool string(string_t& s) override { return put(Value::of(s)); }
    bool binary(binary_t&) override {
        error_ = "binary values are not supported";
        return false;
    }
    bool start_object(std::size_t) override {
        stack_.push_back(Value::object());
        return true;
    }
    bool key(string_t& k) override {
        keys_.push_back(k);
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override {
        stack_.push_back(Value::array());
        return true;
    }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) override {
        // the library message already names line and column; drop its id prefix
        std::string msg = ex.what();
        if (auto cut = msg.find("] "); cut != std::string::npos) msg = msg.substr(cut + 2);
        if (msg.find("line ") == std::string::npos) {
            auto [line, col] = line_col(input_, pos == 0 ? 0 : pos - 1);
            msg = "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg;
        }
        error_ = msg;
        return false;
    }

    Value take() { return std::move(root_); }
    const std::string& error() const { return error_; }

private:
    bool put(Value v) {
        if (stack_.empty()) {
            root_ = std::move(v);
            return true;
        }
        auto& top = stack_.back();
        if (top.type == Value::Type::array) {
            top.push(std::move(v));
        } else {
            top.set(keys_.back(), std::move(v));
            keys_.pop_back();
        }
        return true;
    }
    bool close() {
        Value v = std::move(stack_.back());
        stack_.pop_back();
        return put(std::move(v));
    }

    const std::string& input_;
    std::vector<Value> stack_;
    std::vector<std::string> keys_;
    Value root_;
    std::string error_;
};

}  // namespace detail

inline Value parse_json(const std::string& text) {
    detail::ValueBuilder builder(text);
    bool ok = nlohmann::json::sax_parse(text, &builder, nlohmann::json::input_format_t::json, false);
    if (!ok) throw ParseError(builder.error().empty() ? "invalid document" : builder.error());
    return builder.take();
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_json(std::ostream& out, const Value& v) {
    switch (v.type) {
        case Value::Type::null: out << "null"; break;
        case Value::Type::boolean: out << (v.flag ? "true" : "false"); break;
        case Value::Type::integer: out << v.number.str(); break;
        case Value::Type::string: out << nlohmann::json(v.text).dump(); break;
        case Value::Type::array:
            out << '[';
            for (std::size_t i = 0; i < v.items.size(); ++i) {
                if (i) out << ',';
                write_json(out, v.items[i]);
            }
            out << ']';
            break;
        case Value::Type::object:
            out << '{';
            for (std::size_t i = 0; i < v.members.size(); ++i) {
                if (i) out << ',';
                out << nlohmann::json(v.members[i].first).dump() << ':';
                write_json(out, v.members[i].second);
            }
            out << '}';
            break;
    }
}

inline std::string to_json(const Value& v) {
    std::ostringstream ss;
    write_json(ss, v);
    return ss.str();
}

// ---------------------------------------------------------------------------
// schema helpers

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

inline const Value& field(const Value& obj, const std::string& key, const std::string& path) {
    const Value* v = obj.find(key);
    if (!v) schema_error(path, "missing field \"" + key + "\"");
    return *v;
}

inline void require_object(const Value& v, const std::string& path,
                           std::initializer_list<const char*> allowed) {
    if (v.type != Value::Type::object) schema_error(path, "expected an object");
    for (const auto& [k, _] : v.members) {
        bool known = false;
        for (auto a : allowed)
            if (k == a) known = true;
        if (!known) schema_error(path, "unknown field \"" + k + "\"");
    }
}

inline const std::vector<Value>& array_of(const Value& v, const std::string& path) {
    if (v.type != Value::Type::array) schema_error(path, "expected an array");
    return v.items;
}

inline Int integer_of(const Value& v, const std::string& path) {
    if (v.type != Value::Type::integer) schema_error(path, "expected an integer");
    return v.number;
}

inline std::size_t index_of(const Value& v, const std::string& path) {
    Int x = integer_of(v, path);
    if (x < 0 || x > Int(1) << 30) schema_error(path, "expected a nonnegative index");
    return static_cast<std::size_t>(x);
}

inline IntVector vector_of(const Value& v, const std::string& path, std::size_t dim) {
    const auto& items = array_of(v, path);
    if (items.size() != dim)
        schema_error(path, "expected " + std::to_string(dim) + " entries, found " +
                               std::to_string(items.size()));
    IntVector out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out.push_back(integer_of(items[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::vector<SupportSet> supports_of(const Value& v, const std::string& path, std::size_t dim) {
    std::vector<SupportSet> out;
    const auto& list = array_of(v, path);
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const auto& pts = array_of(list[i], p);
        if (pts.empty()) schema_error(p, "support must not be empty");
        SupportSet s;
        for (std::size_t j = 0; j < pts.size(); ++j)
            s.push_back(vector_of(pts[j], p + "[" + std::to_string(j) + "]", dim));
        out.push_back(canonical(std::move(s)));
    }
    return out;
}

}  // namespace detail

/// {"dim": m, "rays": [[...], ...], "cones": [[ray indices], ...]}
inline Fan fan_from_json(const Value& v, const std::string& path = "fan") {
    detail::require_object(v, path, {"dim", "rays", "cones"});
    Fan fan;
    fan.dim = detail::index_of(detail::field(v, "dim", path), path + ".dim");
    const auto& rays = detail::array_of(detail::field(v, "rays", path), path + ".rays");
    for (std::size_t j = 0; j < rays.size(); ++j)
        fan.rays.push_back(detail::vector_of(rays[j], path + ".rays[" + std::to_string(j) + "]", fan.dim));
    const auto& cones = detail::array_of(detail::field(v, "cones", path), path + ".cones");
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const std::string p = path + ".cones[" + std::to_string(c) + "]";
        Cone cone;
        const auto& idx = detail::array_of(cones[c], p);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            auto j = detail::index_of(idx[i], p + "[" + std::to_string(i) + "]");
            if (j >= fan.rays.size()) detail::schema_error(p, "ray index " + std::to_string(j) + " out of range");
            cone.push_back(j);
        }
        fan.maximal_cones.push_back(std::move(cone));
    }
    return fan;
}

inline Value fan_to_json(const Fan& fan) {
    Value v = Value::object();
    v.set("dim", Value::of(Int(fan.dim)));
    Value rays = Value::array();
    for (const auto& r : fan.rays) {
        Value row = Value::array();
        for (const auto& x : r) row.push(Value::of(x));
        rays.push(std::move(row));
    }
    v.set("rays", std::move(rays));
    Value cones = Value::array();
    for (const auto& c : fan.maximal_cones) {
        Value row = Value::array();
        for (auto j : c) row.push(Value::of(Int(j)));
        cones.push(std::move(row));
    }
    v.set("cones", std::move(cones));
    return v;
}

struct FanDocument {
    Fan fan;
    std::optional<std::vector<SupportSet>> supports;
};

struct WpsDocument {
    Weights weights;
    std::vector<Int> degrees;
};

using ProblemDocument = std::variant<FanDocument, TorusCIProblem, WpsDocument>;

/// Decodes one of the three document shapes:
///   {"fan": <fan object or path>, "supports": [...]}
///   {"dim": m, "supports": [...]}
///   {"weights": [...], "degrees": [...]}
/// A bare fan object is accepted as a fan document without supports.
inline ProblemDocument problem_from_json(const Value& v, const std::filesystem::path& base_dir = {}) {
    if (v.type != Value::Type::object) detail::schema_error("document", "expected an object");
    if (v.find("weights")) {
        detail::require_object(v, "document", {"weights", "degrees"});
        WpsDocument doc;
        const auto& w = detail::array_of(detail::field(v, "weights", "document"), "weights");
        for (std::size_t i = 0; i < w.size(); ++i)
            doc.weights.push_back(detail::integer_of(w[i], "weights[" + std::to_string(i) + "]"));
        if (const Value* d = v.find("degrees")) {
            const auto& items = detail::array_of(*d, "degrees");
            for (std::size_t i = 0; i < items.size(); ++i)
                doc.degrees.push_back(detail::integer_of(items[i], "degrees[" + std::to_string(i) + "]"));
        }
        return doc;
    }
    if (const Value* f = v.find("fan")) {
        detail::require_object(v, "document", {"fan", "supports"});
        FanDocument doc;
        if (f->type == Value::Type::string) {
            std::filesystem::path p = f->text;
            if (p.is_relative()) p = base_dir / p;
            Value inner;
            try {
                inner = parse_json(read_file(p));
            } catch (const ParseError& e) {
                throw ParseError(p.string() + ": " + e.what());
            }
            doc.fan = fan_from_json(inner, "fan");
        } else {
            doc.fan = fan_from_json(*f, "fan");
        }
        if (const Value* s = v.find("supports")) doc.supports = detail::supports_of(*s, "supports", doc.fan.dim);
        return doc;
    }
    if (v.find("rays")) return FanDocument{fan_from_json(v, "document"), std::nullopt};
    if (v.find("dim")) {
        detail::require_object(v, "document", {"dim", "supports"});
        TorusCIProblem p;
        p.m = detail::index_of(detail::field(v, "dim", "document"), "dim");
        p.supports = detail::supports_of(detail::field(v, "supports", "document"), "supports", p.m);
        return p;
    }
    detail::schema_error("document", "expected a fan, torus or weighted projective problem");
}

inline ProblemDocument load_problem(const std::filesystem::path& path) {
    std::string text = read_file(path);
    Value v;
    try {
        v = parse_json(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        return problem_from_json(v, path.parent_path());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// result documents and renderings

inline Value table_to_json(const std::string& command, const EPQTable& t) {
    Value v = Value::object();
    v.set("command", Value::of(command));
    v.set("tag", Value::of(std::string(tag_name(t.tag))));
    v.set("n", Value::of(Int(t.n())));
    Value rows = Value::array();
    for (const auto& r : t.cells) {
        Value row = Value::array();
        for (const auto& x : r) row.push(Value::of(x));
        rows.push(std::move(row));
    }
    v.set("table", std::move(rows));
    return v;
}

inline EPQTable table_from_json(const Value& v) {
    detail::require_object(v, "document", {"command", "tag", "n", "table"});
    const std::string& tag = detail::field(v, "tag", "document").text;
    EPQTable::Tag t;
    if (tag == "ordinary")
        t = EPQTable::Tag::ordinary;
    else if (tag == "compact")
        t = EPQTable::Tag::compact;
    else if (tag == "hodge")
        t = EPQTable::Tag::hodge;
    else
        detail::schema_error("tag", "unknown table tag \"" + tag + "\"");
    const auto& rows = detail::array_of(detail::field(v, "table", "document"), "table");
    EPQTable out(rows.size(), t);
    for (std::size_t p = 0; p < rows.size(); ++p) {
        auto row = detail::vector_of(rows[p], "table[" + std::to_string(p) + "]", rows.size());
        for (std::size_t q = 0; q < rows.size(); ++q) out.at(p, q) = row[q];
    }
    Int n = detail::integer_of(detail::field(v, "n", "document"), "n");
    if (n != Int(out.n())) detail::schema_error("n", "does not match the table size");
    return out;
}

/// Centered diamond: the row for p + q = s lists h^{s,0}, ..., h^{0,s}
/// (restricted to 0 <= p, q <= n), from s = 2n at the top down to s = 0.
inline std::string render_diamond(const EPQTable& t) {
    if (t.size() == 0) return "(empty)\n";
    const std::size_t n = t.size() - 1;
    std::size_t width = 1;
    for (const auto& r : t.cells)
        for (const auto& x : r) width = std::max(width, x.str().size());
    std::ostringstream out;
    for (std::size_t s1 = 2 * n + 1; s1-- > 0;) {
        std::vector<std::string> cells;
        for (std::size_t p = std::min(s1, n) + 1; p-- > 0;) {
            std::size_t q = s1 - p;
            if (q > n) break;
            cells.push_back(t.at(p, q).str());
        }
        std::string line((n + 1 - cells.size()) * (width + 1) / 2, ' ');
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ' ';
            line += std::string(width - cells[i].size(), ' ') + cells[i];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

/// Matrix with rows p = 0..n and columns q = 0..n.
inline std::string render_matrix(const EPQTable& t) {
    if (t.size() == 0) return "(empty)\n";
    std::size_t width = 1;
    for (const auto& r : t.cells)
        for (const auto& x : r) width = std::max(width, x.str().size());
    std::ostringstream out;
    for (const auto& r : t.cells) {
        for (std::size_t q = 0; q < r.size(); ++q) {
            if (q) out << ' ';
            std::string s = r[q].str();
            out << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

inline Value values_to_json(const std::string& command, FormKind kind, std::size_t first_p,
                            const std::vector<Int>& values) {
    Value v = Value::object();
    v.set("command", Value::of(command));
    v.set("kind", Value::of(std::string(kind_name(kind))));
    v.set("p_start", Value::of(Int(first_p)));
    Value arr = Value::array();
    for (const auto& x : values) arr.push(Value::of(x));
    v.set("values", std::move(arr));
    return v;
}

inline std::string render_values(FormKind kind, std::size_t first_p, const std::vector<Int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out << "chi_" << kind_name(kind) << "(" << first_p + i << ") = " << values[i].str() << '\n';
    return out.str();
}

struct FanCheckReport {
    FanReport validity;
    bool complete = false, simplicial = false, regular = false;
    std::optional<bool> adapted;
    std::size_t adapted_cones = 0, total_cones = 0;
};

inline Value fan_check_to_json(const FanCheckReport& r) {
    Value v = Value::object();
    v.set("command", Value::of(std::string("fan-check")));
    v.set("valid", Value::of(r.validity.ok));
    if (!r.validity.ok) {
        v.set("message", Value::of(r.validity.message));
        return v;
    }
    v.set("complete", Value::of(r.complete));
    v.set("simplicial", Value::of(r.simplicial));
    v.set("regular", Value::of(r.regular));
    if (r.adapted) {
        v.set("adapted", Value::of(*r.adapted));
        v.set("adapted_cones", Value::of(Int(r.adapted_cones)));
        v.set("total_cones", Value::of(Int(r.total_cones)));
    }
    return v;
}

inline std::string render_fan_check(const FanCheckReport& r) {
    if (!r.validity.ok) return "invalid: " + r.validity.message + "\n";
    std::vector<std::string> words;
    if (r.complete) words.push_back("complete");
    if (r.simplicial) words.push_back("simplicial");
    if (r.regular) words.push_back("regular");
    std::string line;
    for (std::size_t i = 0; i < words.size(); ++i) line += (i ? " " : "") + words[i];
    if (line.empty()) line = "valid";
    std::string out = line + "\n";
    if (r.adapted) {
        if (*r.adapted)
            out += "adapted\n";
        else
            out += "not adapted (" + std::to_string(r.adapted_cones) + " of " +
                   std::to_string(r.total_cones) + " cones adapted)\n";
    }
    return out;
}

inline FanCheckReport fan_check_from_json(const Value& v) {
    FanCheckReport r;
    auto flag = [&](const char* key) {
        const Value& f = detail::field(v, key, "document");
        if (f.type != Value::Type::boolean) detail::schema_error(key, "expected a boolean");
        return f.flag;
    };
    r.validity.ok = flag("valid");
    if (!r.validity.ok) {
        r.validity.message = detail::field(v, "message", "document").text;
        return r;
    }
    r.complete = flag("complete");
    r.simplicial = flag("simplicial");
    r.regular = flag("regular");
    if (v.find("adapted")) {
        r.adapted = flag("adapted");
        r.adapted_cones = detail::index_of(detail::field(v, "adapted_cones", "document"), "adapted_cones");
        r.total_cones = detail::index_of(detail::field(v, "total_cones", "document"), "total_cones");
    }
    return r;
}

/// Text rendering of any result document produced with --json.
inline std::string render_result(const Value& v) {
    if (v.type != Value::Type::object) detail::schema_error("document", "expected an object");
    const std::string& command = detail::field(v, "command", "document").text;
    if (command == "fan-check") return render_fan_check(fan_check_from_json(v));
    if (command == "euler" || command == "wps-euler") {
        const std::string& k = detail::field(v, "kind", "document").text;
        FormKind kind = k == "alt" ? FormKind::alt : k == "sym" ? FormKind::sym : FormKind::tensor;
        if (k != "alt" && k != "sym" && k != "tensor") detail::schema_error("kind", "unknown kind");
        std::size_t first = detail::index_of(detail::field(v, "p_start", "document"), "p_start");
        std::vector<Int> values;
        for (const auto& x : detail::array_of(detail::field(v, "values", "document"), "values"))
            values.push_back(detail::integer_of(x, "values"));
        return render_values(kind, first, values);
    }
    if (command == "hodge" || command == "wps-hodge") return render_diamond(table_from_json(v));
    if (command == "hodge-torus") return render_matrix(table_from_json(v));
    detail::schema_error("command", "unknown command \"" + command + "\"");
}

}  // namespace toric::io
