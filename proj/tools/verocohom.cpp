#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "verocohom/repcheck.hpp"
#include "verocohom/specfile.hpp"

using namespace verocohom;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistentSpec = 3;
constexpr int kExitBudget = 4;
constexpr int kExitDegenerate = 5;

struct Loaded {
    SpecFile file;
    MapSpec spec;
};

Loaded load(const std::string& path) {
    SpecFile f = parse_specfile(path);
    MapSpec s = build_spec(f);
    return {std::move(f), std::move(s)};
}

int run_cohom(const std::string& path, const std::string& sheaf, long kmin, long kmax,
              const std::string& format) {
    if (kmin > kmax) {
        std::cerr << "error: --kmin exceeds --kmax\n";
        return kExitUsage;
    }
    Loaded in = load(path);
    SheafKind kind = sheaf == "tangent" ? SheafKind::tangent : SheafKind::normal;
    CohomTable t = table(in.spec, kind, kmin, kmax);
    if (format == "csv")
        std::cout << table_to_csv(in.spec, t);
    else if (format == "json")
        std::cout << table_to_json(in.file, in.spec, t);
    else
        std::cout << table_to_text(in.spec, t);
    return 0;
}

int run_branch(const std::string& path, const std::string& format) {
    Loaded in = load(path);
    if (in.spec.n != 2 || in.spec.s != 3) {
        std::cerr << "error: branch analysis needs a P^2 -> P^3 map (n=2, s=3)\n";
        return kExitUsage;
    }
    BranchReport rep = branch_report(in.spec);
    if (format == "json")
        std::cout << branch_to_json(in.file, in.spec, rep);
    else
        std::cout << branch_to_text(in.spec, rep);
    return 0;
}

int run_info(const std::string& path, const std::string& format) {
    Loaded in = load(path);
    InfoReport info = make_info(in.file, in.spec);
    if (format == "json")
        std::cout << info_to_json(info);
    else
        std::cout << info_to_text(info);
    return 0;
}

int run_repcheck(unsigned n, unsigned d, unsigned k) {
    if (n < 1 || k < 1 || k > d) {
        std::cerr << "error: repcheck needs n >= 1 and 1 <= k <= d\n";
        return kExitUsage;
    }
    RepcheckResult res = repcheck(n, d, k);
    for (const std::string& line : res.lines) std::cout << line << "\n";
    return res.ok ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology tables for projected degree-d embeddings"};
    app.require_subcommand(1);

    std::string file, format = "table", sheaf = "normal";
    long kmin = 0, kmax = 0;
    unsigned rn = 0, rd = 0, rk = 0;

    CLI::App* cohom = app.add_subcommand("cohom", "cohomology table of a twisted sheaf");
    cohom->add_option("file", file, "spec file (JSON)")->required();
    cohom->add_option("--sheaf", sheaf, "normal|tangent")
        ->check(CLI::IsMember({"normal", "tangent"}));
    cohom->add_option("--kmin", kmin, "lowest twist")->required();
    cohom->add_option("--kmax", kmax, "highest twist")->required();
    cohom->add_option("--format", format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* tangent = app.add_subcommand("tangent", "shorthand for cohom --sheaf tangent");
    tangent->add_option("file", file, "spec file (JSON)")->required();
    tangent->add_option("--kmin", kmin, "lowest twist")->required();
    tangent->add_option("--kmax", kmax, "highest twist")->required();
    tangent->add_option("--format", format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* branch = app.add_subcommand("branch", "branch-locus invariants for P^2 -> P^3");
    branch->add_option("file", file, "spec file (JSON)")->required();
    branch->add_option("--format", format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI::App* info = app.add_subcommand("info", "derived invariants of a spec file");
    info->add_option("file", file, "spec file (JSON)")->required();
    info->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));

    CLI::App* rep = app.add_subcommand("repcheck", "decomposition and identity checks");
    rep->add_option("--n", rn, "projective dimension")->required();
    rep->add_option("--d", rd, "right tensor degree")->required();
    rep->add_option("--k", rk, "left tensor degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cohom->parsed()) return run_cohom(file, sheaf, kmin, kmax, format);
        if (tangent->parsed()) return run_cohom(file, "tangent", kmin, kmax, format);
        if (branch->parsed()) return run_branch(file, format);
        if (info->parsed()) return run_info(file, format);
        if (rep->parsed()) return run_repcheck(rn, rd, rk);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InconsistentSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistentSpec;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DegenerateMap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
