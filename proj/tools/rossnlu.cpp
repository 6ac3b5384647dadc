#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ross/api/pipeline.hpp"
#include "ross/api/qa.hpp"
#include "ross/api/server.hpp"
#include "ross/model/xml.hpp"
#include "ross/star/ontology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitOntologyError = 2;

int load_pipeline(const std::string& dir, ross::api::Pipeline** out) {
    static std::unique_ptr<ross::api::Pipeline> pipeline;
    auto loaded = ross::api::Pipeline::load(dir);
    if (!loaded.ok()) {
        std::cerr << "ontology error: " << loaded.error().to_string() << "\n";
        return kExitOntologyError;
    }
    pipeline = std::make_unique<ross::api::Pipeline>(loaded.take());
    *out = pipeline.get();
    return kExitOk;
}

int run_disambiguate(const std::string& ontology_dir, const std::string& text,
                     const std::string& file, const std::string& emit_model, bool trace) {
    ross::api::Pipeline* pipeline = nullptr;
    if (int rc = load_pipeline(ontology_dir, &pipeline)) return rc;

    std::string input = text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "input error: cannot open " << file << "\n";
            return kExitInputError;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        input = buffer.str();
    }
    if (input.empty()) {
        std::cerr << "input error: provide --text or --file\n";
        return kExitInputError;
    }

    auto outcome = pipeline->disambiguate(input, trace ? &std::cerr : nullptr);
    if (!outcome.ok()) {
        std::cerr << "input error: " << outcome.error().to_string() << "\n";
        return kExitInputError;
    }
    for (const auto& warning : outcome.value().output.warnings) {
        std::cerr << "warning: " << warning.message << "\n";
    }
    std::cout << outcome.value().annotated << "\n";

    if (!emit_model.empty()) {
        ross::model::InstanceModel model = outcome.value().output.model;
        if (!file.empty()) {
            model.text_source = "DocumentFile";
            model.document_file = file;
        }
        std::ofstream out(emit_model);
        if (!out) {
            std::cerr << "input error: cannot write " << emit_model << "\n";
            return kExitInputError;
        }
        out << ross::model::export_xml(model);
    }
    return kExitOk;
}

int run_ask(const std::string& ontology_dir, const std::string& question,
            const std::string& model_file, const std::string& sentence) {
    ross::api::Pipeline* pipeline = nullptr;
    if (int rc = load_pipeline(ontology_dir, &pipeline)) return rc;

    ross::api::Session session;
    if (!model_file.empty()) {
        std::ifstream in(model_file);
        if (!in) {
            std::cerr << "input error: cannot open " << model_file << "\n";
            return kExitInputError;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        auto imported = ross::model::import_xml(buffer.str());
        if (!imported.ok()) {
            std::cerr << "input error: " << imported.error().to_string() << "\n";
            return kExitInputError;
        }
        session.model = imported.take();
        session.has_model = true;
    } else if (!sentence.empty()) {
        auto outcome = pipeline->disambiguate(sentence);
        if (!outcome.ok()) {
            std::cerr << "input error: " << outcome.error().to_string() << "\n";
            return kExitInputError;
        }
        session.model = std::move(outcome.value().output.model);
        session.resolutions = std::move(outcome.value().output.resolutions);
        session.tokens = std::move(outcome.value().output.tokens);
        session.has_model = true;
    }

    auto answer = ross::api::answer_question(question, session, pipeline->ontology());
    if (!answer.ok()) {
        std::cerr << "input error: " << answer.error().to_string() << "\n";
        return kExitInputError;
    }
    std::cout << answer.value() << "\n";
    return kExitOk;
}

int run_serve(const std::string& ontology_dir, int port) {
    ross::api::Pipeline* pipeline = nullptr;
    if (int rc = load_pipeline(ontology_dir, &pipeline)) return rc;
    ross::api::ApiServer server(std::move(*pipeline));
    std::cerr << "listening on port " << port << "\n";
    auto done = server.run(port);
    if (!done.ok()) {
        std::cerr << "input error: " << done.error().to_string() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

int run_check(const std::string& ontology_dir) {
    std::vector<ross::Diagnostic> diagnostics;
    auto ontology = ross::star::load_ontology_dir(ontology_dir, &diagnostics);
    for (const auto& diagnostic : diagnostics) {
        std::cerr << "repair: " << diagnostic.message;
        if (diagnostic.loc.line > 0) std::cerr << " (line " << diagnostic.loc.line << ")";
        std::cerr << "\n";
    }
    if (!ontology.ok()) {
        std::cerr << "ontology error: " << ontology.error().to_string() << "\n";
        return kExitOntologyError;
    }
    std::cout << "ok: " << ontology.value().classes().size() << " object frame classes, "
              << ontology.value().behaviors().size() << " behavior classes, "
              << diagnostics.size() << " repairs\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star-ontology NLU engine: difficult-pronoun disambiguation"};
    app.require_subcommand(1);

    std::string ontology_dir;
    std::string text, file, emit_model;
    bool trace = false;
    auto* disambiguate = app.add_subcommand("disambiguate", "Resolve pronouns in input text");
    disambiguate->add_option("--ontology", ontology_dir, "Ontology directory")->required();
    disambiguate->add_option("--text", text, "Input text");
    disambiguate->add_option("--file", file, "Input text file");
    disambiguate->add_option("--emit-model", emit_model, "Write the instance model XML here");
    disambiguate->add_flag("--trace", trace, "Print the engine trace to stderr");

    std::string question, model_file, sentence;
    auto* ask = app.add_subcommand("ask", "Answer a question against a prior model");
    ask->add_option("--ontology", ontology_dir, "Ontology directory")->required();
    ask->add_option("--text", question, "Question text")->required();
    ask->add_option("--model", model_file, "Instance-model XML from --emit-model");
    ask->add_option("--sentence", sentence, "Disambiguate this sentence first, then answer");

    int port = 8080;
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--ontology", ontology_dir, "Ontology directory")->required();
    serve->add_option("--port", port, "Port to listen on");

    std::string check_dir;
    auto* check = app.add_subcommand("check-ontology", "Parse and link an ontology directory");
    check->add_option("dir", check_dir, "Ontology directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (disambiguate->parsed()) {
        return run_disambiguate(ontology_dir, text, file, emit_model, trace);
    }
    if (ask->parsed()) return run_ask(ontology_dir, question, model_file, sentence);
    if (serve->parsed()) return run_serve(ontology_dir, port);
    if (check->parsed()) return run_check(check_dir);
    return kExitInputError;
}
