// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qgeom: command-line front end for the statespace geometry library.
//
// Exit codes: 0 success, 1 domain or input error (message on stderr),
// 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgeom/api.hpp"
#include "qgeom/error.hpp"
#include "qgeom/service.hpp"
#include "qgeom/textio.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Args {
    std::string in, out, a, b, align, basis, kind = "auto", format = "text", host = "127.0.0.1", cors = "*";
    std::string t;
    double gamma = 1.0;
    int d = 0;
    int port = 8080;
};

std::string slurp(const std::string& path) { return qgeom::textio::read_file(path); }

json build_request(const std::string& op, const Args& args) {
    json req = json::object();
    if (op == "distance" || op == "angle") {
        req["a"] = slurp(args.a);
        req["b"] = slurp(args.b);
        if (!args.align.empty()) req["align"] = slurp(args.align);
    } else if (op == "mix") {
        json comps = json::array();
        for (const auto& e : qgeom::textio::read_ensemble_entries(slurp(args.in), fs::path(args.in).parent_path()))
            comps.push_back({{"weight", e.weight}, {"rho", e.matrix_text}});
        req["components"] = std::move(comps);
    } else if (op == "tomo") {
        req["record"] = slurp(args.in);
    } else if (op == "hierarchy") {
        req["d"] = args.d;
    } else if (op == "from_statepoint") {
        const qgeom::StatePoint p = qgeom::textio::parse_statepoint(slurp(args.in));
        req["d"] = p.dim;
        req["coords"] = std::vector<double>(p.coords.data(), p.coords.data() + p.coords.size());
    } else {
        req["rho"] = slurp(args.in);
        if (!args.basis.empty()) req["basis"] = slurp(args.basis);
        if (op == "decohere") {
            if (args.t == "inf" || args.t == "infinity") req["t"] = "inf";
            else req["t"] = qgeom::textio::parse_real(args.t);
            req["gamma"] = args.gamma;
        }
        if (op == "scene") req["kind"] = args.kind;
    }
    return req;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw qgeom::Error(qgeom::ErrorCode::ParseError, "cannot write '" + out + "'");
    f << text;
}

int run_op(const std::string& op, const Args& args) {
    const qgeom::Tolerances tol = qgeom::tolerances_from_env();
    const json response = qgeom::api::call(op, build_request(op, args), tol);
    const bool as_json = args.format == "json" || op == "scene";
    emit(as_json ? qgeom::api::dump(response) + "\n" : qgeom::api::render_text(op, response), args.out);
    return 0;
}

int run_serve(const Args& args) {
    qgeom::service::Options options;
    options.cors_origin = args.cors;
    options.tol = qgeom::tolerances_from_env();
    qgeom::service::Server server(options);
    std::cerr << "qgeom: serving /v1 on " << args.host << ":" << args.port << "\n";
    if (!server.listen(args.host, args.port)) {
        std::cerr << "qgeom: cannot listen on " << args.host << ":" << args.port << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qgeom: Euclidean geometry of quantum statespaces"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", args.out, "Write output to this file");
        sub->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_in = [&](CLI::App* sub, const char* help) { sub->add_option("--in", args.in, help)->required(); };

    struct Command {
        const char* name;
        const char* help;
    };
    const Command single[] = {
        {"validate", "Check the density-matrix invariants"},
        {"eig", "Spectrum, entropy and W"},
        {"project", "Projection onto the basis simplex"},
        {"leaf", "Decoherence-leaf coordinates"},
        {"statepoint", "Generalized Bloch coordinates"},
    };
    for (const Command& s : single) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_in(sub, "Density matrix file");
        add_common(sub);
    }
    for (const char* name : {"distance", "angle"}) {
        auto* sub = app.add_subcommand(name, name == std::string("distance") ? "Statespace distance" : "Angle at the infinite-dimensional origin");
        sub->add_option("--a", args.a, "First density matrix file")->required();
        sub->add_option("--b", args.b, "Second density matrix file")->required();
        if (name == std::string("distance")) sub->add_option("--align", args.align, "Unitary applied to b first");
        add_common(sub);
    }
    {
        auto* sub = app.add_subcommand("mix", "Barycentric mixture of an ensemble file");
        add_in(sub, "Ensemble file (weight path per line)");
        add_common(sub);
    }
    {
        auto* sub = app.add_subcommand("measure", "Projective measurement probabilities");
        add_in(sub, "Density matrix file");
        sub->add_option("--basis", args.basis, "Unitary whose columns are the basis (default computational)");
        add_common(sub);
    }
    {
        auto* sub = app.add_subcommand("decohere", "Off-diagonal damping within the leaf");
        add_in(sub, "Density matrix file");
        sub->add_option("--t", args.t, "Time (number or inf)")->required();
        sub->add_option("--gamma", args.gamma, "Damping rate");
        sub->add_option("--basis", args.basis, "Measurement basis unitary");
        add_common(sub);
    }
    {
        auto* sub = app.add_subcommand("tomo", "Reconstruct a state from a tomography record");
        add_in(sub, "Tomography record file");
        add_common(sub);
    }
    {
        auto* sub = app.add_subcommand("hierarchy", "Lengths and angles of the maximally mixed hierarchy");
        sub->add_option("--d", args.d, "Dimension")->required()->check(CLI::Range(2, 1000000));
        add_common(sub);
    }
    {
        auto* sub = app.add_subcommand("scene", "Emit a SceneDocument (JSON)");
        add_in(sub, "Density matrix file");
        sub->add_option("--kind", args.kind, "Scene kind")->check(CLI::IsMember({"auto", "bloch", "simplex2", "simplex3"}));
        sub->add_option("--basis", args.basis, "Measurement basis for Bloch scenes");
        add_common(sub);
    }
    {
        auto* sub = app.add_subcommand("from_statepoint", "Density matrix from a statepoint file");
        add_in(sub, "Statepoint file");
        add_common(sub);
    }
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--host", args.host, "Bind address");
    serve->add_option("--port", args.port, "Port")->check(CLI::Range(1, 65535));
    serve->add_option("--cors", args.cors, "Allowed CORS origin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string op = sub->get_name();
    try {
        if (op == "serve") return run_serve(args);
        return run_op(op, args);
    } catch (const std::exception& e) {
        std::cerr << "qgeom " << op << ": " << e.what() << "\n";
        return 1;
    }
}
