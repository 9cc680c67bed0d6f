// Command-line front end over the C interface of libdwindex.
#include "dwindex/dwindex.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int exit_code;
    std::string message;
};

void check(dw_status status, const std::string& what) {
    if (status == DW_OK) return;
    const int code = status == DW_ERR_PARSE || status == DW_ERR_IO || status == DW_ERR_NULL_ARGUMENT ||
                             status == DW_ERR_BAD_PARAMETER
                         ? kExitUsage
                         : kExitComputation;
    throw Failure{code, what + ": " + dw_status_string(status) + " (" + dw_last_error_message() + ")"};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kExitUsage, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out || !(out << text << '\n')) throw Failure{kExitUsage, "cannot write " + out_path};
}

struct StringDeleter {
    void operator()(char* s) const { dw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* p) const { Free(p); }
};
using Space = std::unique_ptr<dw_space, HandleDeleter<dw_space, dw_space_free>>;
using Op = std::unique_ptr<dw_operator, HandleDeleter<dw_operator, dw_operator_free>>;
using ComplexOp = std::unique_ptr<dw_complex_operator, HandleDeleter<dw_complex_operator, dw_complex_operator_free>>;
using Shell = std::unique_ptr<dw_shell, HandleDeleter<dw_shell, dw_shell_free>>;

Space load_space(const std::string& path) {
    dw_space* raw = nullptr;
    check(dw_space_from_json(slurp(path).c_str(), &raw), "loading space " + path);
    return Space(raw);
}

dw_radius_kind parse_kind(const std::string& name) {
    dw_radius_kind kind{};
    if (dw_radius_kind_parse(name.c_str(), &kind) != DW_OK) throw Failure{kExitUsage, "unknown kind " + name};
    return kind;
}

std::string take(char* s) { return OwnedString(s).get(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Davis-Wielandt radius and index tools for polyhedral normed spaces"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    std::string out_path;

    auto* space_cmd = app.add_subcommand("space", "space construction");
    space_cmd->require_subcommand(1);
    auto* build_cmd = space_cmd->add_subcommand("build", "build a gallery space and write its JSON");
    std::string kind_name, base_name = "regular-polygon";
    int n = 3;
    double gamma = 0.5, xi = 0.5, height = 1.0;
    build_cmd->add_option("--kind", kind_name, "regular-polygon|prism|pyramid-prism|drum|hexagon-gamma|octagon-xi")
        ->required();
    build_cmd->add_option("--n", n, "polygon parameter: the ball is a 2n-gon")->capture_default_str();
    build_cmd->add_option("--gamma", gamma, "hexagon-gamma parameter")->capture_default_str();
    build_cmd->add_option("--xi", xi, "octagon-xi parameter")->capture_default_str();
    auto* height_opt =
        build_cmd->add_option("--height", height, "prism half-height (default 1), or pyramid apex height (default 2)");
    build_cmd->add_option("--base", base_name, "prism base kind")->capture_default_str();
    build_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

    std::string space_path, op_path, kind_arg;
    std::size_t oracle_samples = 0;
    auto* radius_cmd = app.add_subcommand("radius", "radius of an operator");
    radius_cmd->add_option("--space", space_path)->required()->check(CLI::ExistingFile);
    radius_cmd->add_option("--op", op_path)->required()->check(CLI::ExistingFile);
    radius_cmd->add_option("--kind", kind_arg, "w|dw|dwstar|opnorm")->required();
    radius_cmd->add_option("--oracle-samples", oracle_samples, "attach a sampled estimate");
    radius_cmd->add_option("--seed", seed)->capture_default_str();

    int restarts = 0;
    double tol = 1e-6;
    auto* index_cmd = app.add_subcommand("index", "estimate the numerical or Davis-Wielandt index");
    index_cmd->add_option("--space", space_path)->required()->check(CLI::ExistingFile);
    index_cmd->add_option("--kind", kind_arg, "w|dw|dwstar")->required();
    index_cmd->add_option("--restarts", restarts, "multistart count (default 64 in 2-d, 256 otherwise)")
        ->check(CLI::PositiveNumber);
    index_cmd->add_option("--seed", seed)->capture_default_str();
    index_cmd->add_option("--tol", tol)->capture_default_str()->check(CLI::PositiveNumber);

    long vertex = -1;
    auto* certify_cmd = app.add_subcommand("certify", "vertex certificates and the index lower bound");
    certify_cmd->add_option("--space", space_path)->required()->check(CLI::ExistingFile);
    certify_cmd->add_option("--vertex", vertex, "certify a single vertex")->check(CLI::NonNegativeNumber);

    double p = 4.0;
    int dim = 2;
    std::size_t samples = 100000;
    auto* shell_cmd = app.add_subcommand("shell", "sample the Davis-Wielandt shell on complex l_p");
    shell_cmd->add_option("--p", p, "exponent, clamped to [1.01, 100]")->capture_default_str();
    shell_cmd->add_option("--dim", dim, "dimension")->capture_default_str()->check(CLI::Range(2, 1 << 20));
    shell_cmd->add_option("--op", op_path, "complex operator JSON (built-in non-convex block if omitted)")
        ->check(CLI::ExistingFile);
    shell_cmd->add_option("--samples", samples)->capture_default_str()->check(CLI::PositiveNumber);
    shell_cmd->add_option("--seed", seed)->capture_default_str();
    shell_cmd->add_option("--out", out_path, "CSV output path");

    double apex = 2.0;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "run the closed-form and property table");
    reproduce_cmd->add_option("--seed", seed)->capture_default_str();
    reproduce_cmd->add_option("--apex-height", apex, "pyramid apex height (2 is the genuine space)")
        ->capture_default_str();
    reproduce_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*build_cmd) {
            dw_space* raw = nullptr;
            if (kind_name == "pyramid-prism" && height_opt->count() == 0) height = 0.0;
            check(dw_space_gallery(kind_name.c_str(), n, gamma, xi, height, base_name.c_str(), &raw), "space build");
            Space space(raw);
            char* json = nullptr;
            check(dw_space_to_json(space.get(), &json), "space build");
            emit(take(json), out_path);
        } else if (*radius_cmd) {
            const auto kind = parse_kind(kind_arg);
            Space space = load_space(space_path);
            dw_operator* raw = nullptr;
            check(dw_operator_from_json(slurp(op_path).c_str(), &raw), "loading operator " + op_path);
            Op op(raw);
            char* json = nullptr;
            check(dw_radius_json(space.get(), op.get(), kind, oracle_samples, seed, &json), "radius");
            emit(take(json), "");
        } else if (*index_cmd) {
            const auto kind = parse_kind(kind_arg);
            if (kind == DW_KIND_OPNORM) throw Failure{kExitUsage, "index kind must be w, dw or dwstar"};
            Space space = load_space(space_path);
            char* json = nullptr;
            check(dw_index_estimate_json(space.get(), kind, restarts, seed, tol, &json), "index");
            emit(take(json), "");
        } else if (*certify_cmd) {
            Space space = load_space(space_path);
            char* json = nullptr;
            check(dw_certify_json(space.get(), vertex, &json), "certify");
            emit(take(json), "");
        } else if (*shell_cmd) {
            p = std::clamp(p, 1.01, 100.0);
            dw_complex_operator* raw = nullptr;
            if (op_path.empty()) {
                check(dw_complex_operator_nonconvex(dim, &raw), "shell operator");
            } else {
                check(dw_complex_operator_from_json(slurp(op_path).c_str(), &raw), "loading operator " + op_path);
            }
            ComplexOp op(raw);
            if (dw_complex_operator_dim(op.get()) != static_cast<std::size_t>(dim))
                throw Failure{kExitUsage, "operator dimension differs from --dim"};
            dw_shell* shell_raw = nullptr;
            check(dw_shell_sample(op.get(), p, samples, seed, &shell_raw), "shell");
            Shell shell(shell_raw);
            if (!out_path.empty()) check(dw_shell_write_csv(shell.get(), out_path.c_str()), "writing " + out_path);
            char* json = nullptr;
            check(dw_shell_summary_json(shell.get(), &json), "shell");
            emit(take(json), "");
        } else if (*reproduce_cmd) {
            char* json = nullptr;
            int all_pass = 0;
            check(dw_reproduce_json(seed, apex, &json, &all_pass), "reproduce");
            emit(take(json), out_path);
            return all_pass ? 0 : kExitComputation;
        }
    } catch (const Failure& f) {
        std::cerr << "dwindex: " << f.message << '\n';
        return f.exit_code;
    }
    return 0;
}
