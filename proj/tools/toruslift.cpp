#include "toruslift/selftest.hpp"
#include "toruslift/session.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Exact line-bundle and doubled-torus calculator"};
    app.require_subcommand(1);

    std::string path;
    toruslift::RunOptions opts;
    CLI::App* run_cmd = app.add_subcommand("run", "Execute a session file");
    run_cmd->add_option("file", path, "session file")->required();
    run_cmd->add_flag("--records", opts.records, "machine-readable key=value output");
    run_cmd->add_flag("--assert", opts.assert_mode, "exit 1 when a verification fails");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (selftest_cmd->parsed()) {
        bool all = true;
        for (const auto& r : toruslift::run_acceptance()) {
            std::cout << (r.pass ? "pass" : "FAIL") << ": " << r.name << "\n";
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }

    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();

    try {
        toruslift::Session session = toruslift::parse_session(text.str());
        return toruslift::run(session, std::cout, opts);
    } catch (const toruslift::SessionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const toruslift::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
