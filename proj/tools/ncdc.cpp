#include "ncdc/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using ncdc::cli::CommandOptions;

    CLI::App app{"Exact first-order differential calculi over quotients of tensor algebras"};
    app.name("ncdc");

    std::string command;
    std::string spec_path;
    CommandOptions opt;
    std::size_t max_degree = 0;
    std::string element;
    std::string emit;
    std::string q_value;

    std::string commands;
    for (const auto& c : ncdc::cli::command_names()) commands += (commands.empty() ? "" : ", ") + c;
    app.add_option("command", command, "One of: " + commands)->required()->check(CLI::IsMember(ncdc::cli::command_names()));
    app.add_option("spec", spec_path, "Presentation and initial data (JSON)")->required();
    auto* max_opt = app.add_option("--max-degree", max_degree, "Degree bound N (overrides the document)");
    app.add_flag("--truncated", opt.truncated, "check: also run the truncated ideal scan up to N");
    auto* elem_opt = app.add_option("--element", element, "partials: algebra element, e.g. \"x*y - q*y*x\"");
    auto* emit_opt = app.add_option("--emit", emit, "Write the full JSON result to this file");
    auto* q_opt = app.add_option("--q-value", q_value, "Specialise q to this rational (or \"symbolic\")");
    app.add_flag("--switch-form", opt.switch_form,
                 "optimal: also report ker(d0⊗id_V), the switch-only reading of the linear condition");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (*max_opt) opt.max_degree = max_degree;
    if (*elem_opt) opt.element = element;
    if (*emit_opt) opt.emit = emit;
    if (*q_opt) opt.q_value = q_value;

    const auto res = ncdc::cli::run_command_file(command, spec_path, opt);
    if (res.exit_code == 2) std::cerr << res.text;
    else std::cout << res.text;
    std::cout << "--- json ---\n" << res.json.dump(2) << "\n";
    return res.exit_code;
}
