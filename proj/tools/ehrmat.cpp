#include "ehrmat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ehrmat;

namespace {

enum Exit { Ok = 0, Violation = 1, Invalid = 2, OverBudget = 3 };

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart polynomials of matroid and polymatroid polytopes"};
    app.require_subcommand(1);
    bool fast = false;
    app.add_flag("--fast", fast, "Barycentric visibility, basis-exchange adjacency, power-sum Todd products");

    std::string path;
    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial");
    ehrhart->add_option("document", path)->required()->check(CLI::ExistingFile);
    auto* hstar = app.add_subcommand("hstar", "h*-vector and unimodality");
    hstar->add_option("document", path)->required()->check(CLI::ExistingFile);
    auto* genfun = app.add_subcommand("genfun", "Half-open generating function terms");
    genfun->add_option("document", path)->required()->check(CLI::ExistingFile);

    long kmax = 3;
    std::string golden_path;
    auto* verify = app.add_subcommand("verify", "Compare the pipeline with brute-force counting");
    verify->add_option("document", path)->required()->check(CLI::ExistingFile);
    verify->add_option("--kmax", kmax, "Largest dilation counted directly")->check(CLI::NonNegativeNumber);
    verify->add_option("--golden", golden_path, "Ehrhart golden to compare against")->check(CLI::ExistingFile);

    std::size_t nmax = 20;
    std::size_t rmax = 100;
    bool csv = false;
    auto* scan = app.add_subcommand("scan-uniform", "Conjecture scan over uniform matroids");
    scan->add_option("--nmax", nmax)->check(CLI::Range(2, 100));
    scan->add_option("--rmax", rmax)->check(CLI::PositiveNumber);
    scan->add_flag("--csv", csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Invalid;
    }

    try {
        RunOptions options;
        options.fast = fast;
        options.budget = Budget::from_environment();
        if (*scan) return cmd_scan_uniform(nmax, rmax, csv, std::cout) == 0 ? Ok : Violation;

        const MatroidDocument doc = load_document(path, options.budget);
        if (*ehrhart) print(cmd_ehrhart(doc, options));
        else if (*hstar) print(cmd_hstar(doc, options));
        else if (*genfun) print(cmd_genfun(doc, options));
        else if (*verify) {
            Json golden;
            if (!golden_path.empty()) {
                std::ifstream in(golden_path);
                try {
                    golden = Json::parse(in);
                } catch (const Json::exception& e) {
                    throw ValidationError(golden_path + ": " + e.what());
                }
            }
            const Json report = cmd_verify(doc, kmax, golden_path.empty() ? nullptr : &golden, options);
            print(report);
            return report["match"].get<bool>() ? Ok : Violation;
        }
        return Ok;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return Invalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return OverBudget;
    }
}
