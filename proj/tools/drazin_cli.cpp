// Command-line surface: compute Drazin inverses, emit certified
// decompositions, verify single theorems, or fuzz the whole suite.
//
// Exit codes: 0 success, 1 usage/parse/IO error, 2 a verification
// suite found a failing trial (counterexample dump in the report).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drazin/decompose.hpp"
#include "drazin/harness.hpp"
#include "drazin/io.hpp"

namespace {

using drazin::Matrix;

nlohmann::ordered_json conditions_json(const drazin::Conditions& conditions) {
    nlohmann::ordered_json j;
    for (const auto& [name, ok] : conditions) {
        j[name] = ok;
    }
    return j;
}

int cmd_compute(const std::string& input, const std::string& output) {
    Matrix a = drazin::read_matrix_file(input);
    drazin::detail::require_square(a, "compute");
    drazin::DrazinResult d = drazin::drazin_inverse(a);
    nlohmann::ordered_json j;
    j["a_d"] = drazin::matrix_to_json(d.a_d);
    j["index"] = d.index;
    j["a_pi"] = drazin::matrix_to_json(d.a_pi);
    drazin::write_file(output, drazin::dump_json(j));
    return 0;
}

int cmd_decompose(const std::string& form, const std::string& input,
                  const std::string& output) {
    Matrix a = drazin::read_matrix_file(input);
    nlohmann::ordered_json j;
    j["form"] = form;
    if (form == "quasipolar") {
        drazin::QuasipolarCertificate c = drazin::quasipolar(a);
        j["p"] = drazin::matrix_to_json(c.p);
        j["b"] = drazin::matrix_to_json(c.b);
        j["conditions"] = conditions_json(drazin::certify_quasipolar(a, c));
    } else if (form == "euw") {
        drazin::EUWDecomposition d = drazin::euw_decompose(a);
        j["e"] = drazin::matrix_to_json(d.e);
        j["u"] = drazin::matrix_to_json(d.u);
        j["w"] = drazin::matrix_to_json(d.w);
        j["conditions"] = conditions_json(drazin::certify_euw(a, d));
    } else if (form == "two-units") {
        drazin::UnitPair p = drazin::two_units(a);
        j["u1"] = drazin::matrix_to_json(p.u1);
        j["u2"] = drazin::matrix_to_json(p.u2);
        j["conditions"] = conditions_json(drazin::certify_two_units(a, p));
    } else if (form == "corner") {
        drazin::CornerData c = drazin::corner_characterize(a);
        j["e"] = drazin::matrix_to_json(c.e);
        j["corner_inverse"] = drazin::matrix_to_json(c.corner_inverse);
        j["a_d"] = drazin::matrix_to_json(c.a_d);
        j["conditions"] = conditions_json(drazin::certify_corner(a, c));
    } else if (form == "splitting") {
        drazin::Splitting s = drazin::invariant_splitting(a);
        j["basis_p"] = drazin::matrix_to_json(s.basis_p);
        j["basis_q"] = drazin::matrix_to_json(s.basis_q);
        j["restriction_p"] = drazin::matrix_to_json(s.restriction_p);
        j["restriction_q"] = drazin::matrix_to_json(s.restriction_q);
        j["conditions"] = conditions_json(drazin::certify_splitting(a, s));
    } else if (form == "scaler") {
        Matrix u = drazin::cor23_scaler(a);
        j["u"] = drazin::matrix_to_json(u);
        j["conditions"] = conditions_json(drazin::certify_scaler(a, u));
    } else {
        std::cerr << "unknown form: " << form
                  << " (expected quasipolar|euw|two-units|corner|splitting|"
                     "scaler)\n";
        return 1;
    }
    drazin::write_file(output, drazin::dump_json(j));
    return 0;
}

int cmd_verify(const std::string& theorem, std::size_t size, std::size_t trials,
               std::uint64_t seed, long entry_bound,
               const std::string& report_path) {
    if (!drazin::is_theorem_id(theorem) && theorem != "negative-control") {
        std::cerr << "unknown theorem id: " << theorem << "\nvalid ids:";
        for (const std::string& id : drazin::theorem_ids()) {
            std::cerr << " " << id;
        }
        std::cerr << "\n";
        return 1;
    }
    drazin::TheoremReport report =
        drazin::run_suite(theorem, trials, {size}, seed, entry_bound);
    std::string text = drazin::dump_json(drazin::report_to_json(report));
    std::cout << text;
    if (!report_path.empty()) {
        drazin::write_file(report_path, text);
    }
    return report.passes == report.trials ? 0 : 2;
}

int cmd_fuzz(std::size_t trials, std::uint64_t seed,
             const std::vector<std::size_t>& sizes, long entry_bound,
             const std::string& report_path) {
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (const std::string& id : drazin::theorem_ids()) {
        drazin::TheoremReport report =
            drazin::run_suite(id, trials, sizes, seed, entry_bound);
        all_pass = all_pass && report.passes == report.trials;
        std::cerr << id << ": " << report.passes << "/" << report.trials << " ("
                  << report.elapsed_ms << " ms)\n";
        reports.push_back(drazin::report_to_json(report));
    }
    nlohmann::ordered_json j;
    j["reports"] = std::move(reports);
    drazin::write_file(report_path, drazin::dump_json(j));
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Drazin inverses and certified decompositions over Q(i)"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string form;
    std::string theorem;
    std::string report_path;
    std::size_t size = 2;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    long entry_bound = 3;
    std::vector<std::size_t> sizes{2, 3, 4};

    CLI::App* compute = app.add_subcommand(
        "compute", "Drazin inverse, index and spectral idempotent of a matrix");
    compute->add_option("--input", input, "matrix file (JSON)")->required();
    compute->add_option("--output", output, "result file")->required();

    CLI::App* decompose = app.add_subcommand(
        "decompose", "certified decomposition of a matrix");
    decompose
        ->add_option("--form", form,
                     "quasipolar|euw|two-units|corner|splitting|scaler")
        ->required();
    decompose->add_option("--input", input, "matrix file (JSON)")->required();
    decompose->add_option("--output", output, "certificate file")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "run one theorem suite on generated instances");
    verify->add_option("--theorem", theorem, "theorem id")->required();
    verify->add_option("--size", size, "matrix size (block size in section 3)");
    verify->add_option("--trials", trials, "number of trials");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--entry-bound", entry_bound, "raw entry bound");
    verify->add_option("--report", report_path, "also write the report here");

    CLI::App* fuzz =
        app.add_subcommand("fuzz", "run every theorem suite and write a report");
    fuzz->add_option("--trials", trials, "trials per suite");
    fuzz->add_option("--seed", seed, "master seed");
    fuzz->add_option("--sizes", sizes, "sizes cycled across trials")
        ->delimiter(',');
    fuzz->add_option("--entry-bound", entry_bound, "raw entry bound");
    fuzz->add_option("--report", report_path, "aggregate report file")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            return cmd_compute(input, output);
        }
        if (decompose->parsed()) {
            return cmd_decompose(form, input, output);
        }
        if (verify->parsed()) {
            return cmd_verify(theorem, size, trials, seed, entry_bound,
                              report_path);
        }
        if (fuzz->parsed()) {
            return cmd_fuzz(trials, seed, sizes, entry_bound, report_path);
        }
    } catch (const drazin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
