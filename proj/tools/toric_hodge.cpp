// toric-hodge: command-line front end.
//
// Exit status: 0 success, 2 parse or usage error, 3 precondition violation
// (including an invalid fan in fan-check), 4 internal consistency failure.

#include "toric_hodge/io.hpp"
#include "toric_hodge/toric_hodge.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace toric;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kConsistency = 4 };

struct Options {
    bool json = false;
    std::string file;
    std::string kind = "alt";
    long p = -1;
    bool all_p = false;
};

FormKind parse_kind(const std::string& s) {
    if (s == "alt") return FormKind::alt;
    if (s == "sym") return FormKind::sym;
    if (s == "tensor") return FormKind::tensor;
    throw io::ParseError("--kind must be alt, sym or tensor");
}

template <class T>
const T& expect(const io::ProblemDocument& doc, const char* what) {
    if (const T* t = std::get_if<T>(&doc)) return *t;
    throw io::ParseError(std::string("expected a ") + what + " document");
}

void emit(const Options& opt, const io::Value& result, const std::string& text) {
    if (opt.json)
        std::cout << io::to_json(result) << '\n';
    else
        std::cout << text;
}

std::vector<std::size_t> p_range(const Options& opt, long top) {
    if (opt.all_p == (opt.p >= 0)) throw io::ParseError("give exactly one of -p N and --all-p");
    if (opt.p >= 0) return {static_cast<std::size_t>(opt.p)};
    std::vector<std::size_t> out;
    for (long p = 0; p <= top; ++p) out.push_back(static_cast<std::size_t>(p));
    return out;
}

void require_complete_simplicial(const Fan& fan) {
    auto report = validate(fan);
    if (!report.ok) throw PreconditionError("invalid fan: " + report.message);
    if (!is_complete(fan)) throw PreconditionError("fan is not complete");
    if (!is_simplicial(fan)) throw PreconditionError("fan is not simplicial");
}

int cmd_fan_check(const Options& opt) {
    auto doc = io::load_problem(opt.file);
    const auto& fd = expect<io::FanDocument>(doc, "fan");
    io::FanCheckReport r;
    r.validity = validate(fd.fan);
    if (r.validity.ok) {
        r.complete = is_complete(fd.fan);
        r.simplicial = is_simplicial(fd.fan);
        r.regular = is_regular(fd.fan);
        if (fd.supports) {
            auto rep = adapted_subfan(fd.fan, *fd.supports);
            r.adapted = rep.all_adapted;
            r.adapted_cones = rep.subfan.size();
            r.total_cones = rep.cones.size();
        }
    }
    emit(opt, io::fan_check_to_json(r), io::render_fan_check(r));
    return r.validity.ok ? kOk : kPrecondition;
}

int cmd_euler(const Options& opt) {
    const FormKind kind = parse_kind(opt.kind);
    auto doc = io::load_problem(opt.file);
    const auto& fd = expect<io::FanDocument>(doc, "fan");
    const auto supports = fd.supports.value_or(std::vector<SupportSet>{});
    require_complete_simplicial(fd.fan);
    const auto ps = p_range(opt, static_cast<long>(fd.fan.dim) - static_cast<long>(supports.size()));
    const auto ctx = build_context(fd.fan);
    const auto degrees = degrees_of(fd.fan, supports);
    std::vector<Int> values;
    for (auto p : ps) {
        switch (kind) {
            case FormKind::alt: values.push_back(chi_alt(ctx, degrees, p)); break;
            case FormKind::sym: values.push_back(chi_sym(ctx, degrees, p)); break;
            case FormKind::tensor: values.push_back(chi_tensor(ctx, degrees, p)); break;
        }
    }
    const std::size_t first = ps.empty() ? 0 : ps.front();
    emit(opt, io::values_to_json("euler", kind, first, values), io::render_values(kind, first, values));
    return kOk;
}

int cmd_hodge(const Options& opt) {
    auto doc = io::load_problem(opt.file);
    const auto& fd = expect<io::FanDocument>(doc, "fan");
    require_complete_simplicial(fd.fan);
    auto table = hodge_compact(fd.fan, fd.supports.value_or(std::vector<SupportSet>{}));
    emit(opt, io::table_to_json("hodge", table), io::render_diamond(table));
    return kOk;
}

int cmd_hodge_torus(const Options& opt) {
    auto doc = io::load_problem(opt.file);
    const auto& problem = expect<TorusCIProblem>(doc, "torus");
    auto table = epq_c_ci(problem);
    emit(opt, io::table_to_json("hodge-torus", table), io::render_matrix(table));
    return kOk;
}

int cmd_wps_euler(const Options& opt) {
    const FormKind kind = parse_kind(opt.kind);
    auto doc = io::load_problem(opt.file);
    const auto& wd = expect<io::WpsDocument>(doc, "weighted projective");
    const auto ps = p_range(opt, static_cast<long>(wd.weights.size()) - 1 - static_cast<long>(wd.degrees.size()));
    std::vector<Int> values;
    for (auto p : ps) values.push_back(wps_chi(wd.weights, wd.degrees, p, kind));
    const std::size_t first = ps.empty() ? 0 : ps.front();
    emit(opt, io::values_to_json("wps-euler", kind, first, values), io::render_values(kind, first, values));
    return kOk;
}

int cmd_wps_hodge(const Options& opt) {
    auto doc = io::load_problem(opt.file);
    const auto& wd = expect<io::WpsDocument>(doc, "weighted projective");
    auto table = wps_hodge(wd.weights, wd.degrees);
    emit(opt, io::table_to_json("wps-hodge", table), io::render_diamond(table));
    return kOk;
}

int cmd_render(const Options& opt) {
    auto v = io::parse_json(io::read_file(opt.file));
    // validates the document before echoing it
    std::string text = io::render_result(v);
    if (opt.json)
        std::cout << io::to_json(v) << '\n';
    else
        std::cout << text;
    return kOk;
}

int run(int argc, char** argv) {
    Options opt;
    std::function<int(const Options&)> action;

    CLI::App app{"Euler characteristics of forms and Hodge numbers of toric complete intersections"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "emit machine-readable JSON");

    auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", opt.file, "problem document")->required(); };
    auto p_args = [&](CLI::App* sub) {
        sub->add_option("--kind", opt.kind, "alt, sym or tensor")->check(CLI::IsMember({"alt", "sym", "tensor"}));
        auto* p = sub->add_option("-p", opt.p, "form degree")->check(CLI::NonNegativeNumber);
        sub->add_flag("--all-p", opt.all_p, "every p from 0 to the dimension")->excludes(p);
    };
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "emit machine-readable JSON"); };

    auto* fan_check = app.add_subcommand("fan-check", "validate a fan and report its properties");
    file_arg(fan_check);
    json_flag(fan_check);
    fan_check->callback([&] { action = cmd_fan_check; });

    auto* euler = app.add_subcommand("euler", "Euler characteristics of forms on a complete intersection");
    file_arg(euler);
    p_args(euler);
    json_flag(euler);
    euler->callback([&] { action = cmd_euler; });

    auto* hodge = app.add_subcommand("hodge", "Hodge diamond of a complete intersection in a toric variety");
    file_arg(hodge);
    json_flag(hodge);
    hodge->callback([&] { action = cmd_hodge; });

    auto* torus = app.add_subcommand("hodge-torus", "e_c^{pq} table of a complete intersection in a torus");
    file_arg(torus);
    json_flag(torus);
    torus->callback([&] { action = cmd_hodge_torus; });

    auto* wps = app.add_subcommand("wps", "weighted projective space computations");
    wps->require_subcommand(1);
    auto* wps_euler = wps->add_subcommand("euler", "Euler characteristics of forms");
    file_arg(wps_euler);
    p_args(wps_euler);
    json_flag(wps_euler);
    wps_euler->callback([&] { action = cmd_wps_euler; });
    auto* wps_h = wps->add_subcommand("hodge", "Hodge diamond");
    file_arg(wps_h);
    json_flag(wps_h);
    wps_h->callback([&] { action = cmd_wps_hodge; });

    auto* render = app.add_subcommand("render", "render a JSON result as text, or canonical JSON with --json");
    file_arg(render);
    json_flag(render);
    render->callback([&] { action = cmd_render; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        return action(opt);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kPrecondition;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kConsistency;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kConsistency;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
