#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "vtwist/commands.hpp"

namespace {

using vtwist::json;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw vtwist::InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<vtwist::Rational> parse_pool(const std::string& text) {
    std::vector<vtwist::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(vtwist::parse_rational(item));
    return out;
}

void summarize(const vtwist::CommandResult& res) {
    const json& r = res.report;
    std::cerr << r.value("command", std::string("?")) << ": " << (res.exit_code == 0 ? "PASS" : "FAIL") << " (exit "
              << res.exit_code << ")\n";
    if (r.contains("chi")) std::cerr << "  chi = " << r["chi"].get<std::string>() << "\n";
    if (r.contains("psi")) std::cerr << "  psi = " << r["psi"].get<std::string>() << "\n";
    if (r.contains("stability")) std::cerr << "  stability: " << r["stability"].get<std::string>() << "\n";
    for (const char* key : {"commutation", "fiber", "eigenvalue", "lemma1"})
        if (r.contains(key) && r[key].is_object() && r[key].contains("ok"))
            std::cerr << "  " << key << ": " << (r[key]["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    if (r.contains("property")) std::cerr << "  property: " << r["property"].get<std::string>() << "\n";
    if (r.contains("message")) std::cerr << "  " << r["message"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for V-twisted Higgs fields on the projective line"};
    app.require_subcommand(1);

    vtwist::CommandOptions opts;
    std::string sign_text = "+1";
    bool no_timing = false;
    app.add_option("--sign", sign_text, "eigenvalue sign convention")->check(CLI::IsMember({"+1", "1", "-1"}));
    app.add_flag("--no-timing", no_timing, "omit the timing field");
    app.add_option("--seed", opts.seed, "seed for randomized steps");

    std::string path;
    auto add_doc_command = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("document", path, "instance document (JSON), '-' for stdin")->required();
        sub->add_option("--seed", opts.seed, "seed for randomized steps");
        return sub;
    };
    CLI::App* check = add_doc_command("check", "run all admissibility checks");
    CLI::App* reconstruct = add_doc_command("reconstruct", "reconstruct the field and emit its certificate");
    CLI::App* spectral = add_doc_command("spectral", "spectral curve, integrality and psi");
    CLI::App* build = add_doc_command("build", "build a field from spectral data");

    int c = 0, d = 0, ell = 1;
    std::string pool_text;
    CLI::App* hecke = app.add_subcommand("hecke-make", "construct Hecke data with a prescribed splitting type");
    hecke->add_option("--c", c, "larger twist")->required();
    hecke->add_option("--d", d, "smaller twist")->required();
    hecke->add_option("--ell", ell, "number of points")->required();
    hecke->add_option("--pool", pool_text, "comma-separated candidate points")->required();
    hecke->add_option("--seed", opts.seed, "seed");

    int count = 50;
    CLI::App* selftest = app.add_subcommand("selftest", "property checks on random instances");
    selftest->add_option("--count", count, "number of instances");
    selftest->add_option("--seed", opts.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opts.sign = sign_text == "-1" ? -1 : 1;
    opts.timing = !no_timing;

    vtwist::CommandResult res;
    try {
        if (*hecke) {
            res = vtwist::cmd_hecke_make(c, d, ell, parse_pool(pool_text), opts);
        } else if (*selftest) {
            res = vtwist::cmd_selftest(count, opts);
        } else {
            json doc;
            try {
                doc = json::parse(read_input(path));
            } catch (const json::parse_error& e) {
                throw vtwist::ParseError(std::string("invalid JSON: ") + e.what());
            }
            if (*check) res = vtwist::cmd_check(doc, opts);
            else if (*reconstruct) res = vtwist::cmd_reconstruct(doc, opts);
            else if (*spectral) res = vtwist::cmd_spectral(doc, opts);
            else if (*build) res = vtwist::cmd_build(doc, opts);
        }
    } catch (const vtwist::InputError& e) {
        res.report = {{"error", vtwist::error_kind(e)}, {"message", e.what()}, {"passed", false}};
        res.exit_code = 2;
    }
    std::cout << res.report.dump(2) << "\n";
    summarize(res);
    return res.exit_code;
}
