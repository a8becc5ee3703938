#include "qva/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

qva::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qva::parse_error("cannot open config file '" + path + "'");
    qva::Json j;
    in >> j;
    return j;
}

qva::Config make_config(const std::string& config_path, const std::string& preset_name,
                        const std::string& suites_csv, int max_weight_twice, int mode_radius,
                        int box_radius, int filt_degree, int order,
                        const std::string& report_path, bool timings) {
    qva::Json j = config_path.empty() ? qva::Json::object() : load_json(config_path);
    if (!preset_name.empty()) j["preset"] = preset_name;
    if (!suites_csv.empty()) {
        qva::Json arr = qva::Json::array();
        std::stringstream ss(suites_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) arr.push_back(tok);
        j["suites"] = arr;
    }
    if (max_weight_twice >= 0) j["max_weight"] = std::to_string(max_weight_twice) + "/2";
    if (mode_radius >= 0) j["mode_radius"] = mode_radius;
    if (box_radius >= 0) j["box_radius"] = box_radius;
    if (filt_degree >= 0) j["filt_degree"] = filt_degree;
    if (order >= 0) j["order"] = order;
    if (!report_path.empty()) j["report_path"] = report_path;
    qva::Config cfg = qva::parse_config(j);
    cfg.timings = timings;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for diagonal Zamolodchikov-Faddeev "
                 "vertex algebras"};
    app.require_subcommand(1);

    std::string config_path, preset_name, suites_csv, report_path, word_text;
    int max_weight_twice = -1, mode_radius = -1, box_radius = -1, order = -1,
        filt_degree = -1;
    bool timings = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--preset", preset_name,
                        "named preset: weyl, clifford, mixed, zf-linear, yangian-sl2");
        cmd->add_option("--order", order, "series truncation order");
    };

    CLI::App* run = app.add_subcommand("run", "run verification suites");
    add_common(run);
    run->add_option("--suites", suites_csv, "comma-separated suite list");
    run->add_option("--max-weight", max_weight_twice, "weight cap, in half units");
    run->add_option("--mode-radius", mode_radius, "Virasoro mode radius");
    run->add_option("--box-radius", box_radius, "window box radius");
    run->add_option("--filt-degree", filt_degree, "top filtration degree");
    run->add_option("--report", report_path, "write the JSON report here");
    run->add_flag("--timings", timings, "include wall times in the report");

    CLI::App* reduce = app.add_subcommand("reduce", "normal form of a word");
    add_common(reduce);
    reduce->add_option("word", word_text, "word, e.g. \"X[1,0] Y[1,-1]\"")->required();

    CLI::App* character = app.add_subcommand("character", "graded dimension table");
    add_common(character);
    character->add_option("--max-weight", max_weight_twice, "weight cap, in half units");

    CLI::App* ybe = app.add_subcommand("ybe", "unitarity and Yang-Baxter checks");
    add_common(ybe);
    ybe->add_option("--box-radius", box_radius, "window box radius");

    CLI11_PARSE(app, argc, argv);

    try {
        qva::Config cfg = make_config(config_path, preset_name, suites_csv, max_weight_twice,
                                      mode_radius, box_radius, filt_degree, order,
                                      report_path, timings);

        if (run->parsed()) {
            int exit_code = 0;
            qva::Json report = qva::run_suites(cfg, exit_code);
            std::cout << report.dump(2) << "\n";
            if (!cfg.report_path.empty()) {
                std::ofstream out(cfg.report_path);
                out << report.dump(2) << "\n";
            }
            return exit_code;
        }
        if (reduce->parsed()) {
            qva::AlgebraElement e =
                qva::AlgebraElement::monomial(qva::parse_word(word_text));
            std::cout << qva::to_string(qva::normal_form(e, cfg.spec.constant())) << "\n";
            return 0;
        }
        if (character->parsed()) {
            auto dims = qva::character_table(cfg.spec.constant(), cfg.max_weight);
            for (long long t = 0; t < static_cast<long long>(dims.size()); ++t)
                std::cout << qva::to_string(qva::HalfInt(t)) << "\t" << dims[t] << "\n";
            return 0;
        }
        if (ybe->parsed()) {
            qva::DiagonalS S = qva::build_S(cfg.spec);
            qva::CheckReport unit = qva::unitarity_check(S, cfg.spec.order);
            qva::QybeReport qy = qva::qybe_check(S, cfg.spec.order, cfg.box_radius);
            std::cout << "unitarity: " << (unit.pass() ? "pass" : "fail") << " ("
                      << unit.checked << " pairs)\n";
            std::cout << "qybe: " << (qy.pass() ? "pass" : "fail") << " (" << qy.cells.checked
                      << " triples, " << qy.inconclusive << " inconclusive cells)\n";
            return unit.pass() && qy.pass() ? 0 : 1;
        }
    } catch (const qva::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qva::Json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
