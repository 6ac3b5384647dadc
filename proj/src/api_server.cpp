#include "ross/api/server.hpp"

#include <cctype>

#include "httplib.h"

namespace ross::api {

namespace {

std::string percent_decode(const std::string& text) {
    std::string out;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+') {
            out += ' ';
        } else if (text[i] == '%' && i + 2 < text.size() &&
                   std::isxdigit(static_cast<unsigned char>(text[i + 1])) &&
                   std::isxdigit(static_cast<unsigned char>(text[i + 2]))) {
            out += static_cast<char>(std::stoi(text.substr(i + 1, 2), nullptr, 16));
            i += 2;
        } else {
            out += text[i];
        }
    }
    return out;
}

}  // namespace

std::map<std::string, std::string> parse_form_body(const std::string& body) {
    std::map<std::string, std::string> out;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t amp = body.find('&', pos);
        std::string field =
            amp == std::string::npos ? body.substr(pos) : body.substr(pos, amp - pos);
        if (!field.empty()) {
            size_t eq = field.find('=');
            if (eq == std::string::npos) {
                out[percent_decode(field)] = "";
            } else {
                out[percent_decode(field.substr(0, eq))] = percent_decode(field.substr(eq + 1));
            }
        }
        if (amp == std::string::npos) break;
        pos = amp + 1;
    }
    return out;
}

struct ApiServer::Impl {
    httplib::Server server;
    std::thread thread;
    int port = 0;
};

ApiServer::ApiServer(Pipeline pipeline)
    : pipeline_(std::move(pipeline)), impl_(std::make_unique<Impl>()) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
        Response out = handle(req.body);
        res.status = out.status;
        res.set_content(out.body, "text/plain");
    };
    impl_->server.Post("/ServerMethod.NLUTask", handler);
    impl_->server.Post("/ServerSideTask.NLUTask", handler);
}

ApiServer::~ApiServer() { stop(); }

ApiServer::Response ApiServer::handle(const std::string& body) {
    auto params = parse_form_body(body);
    const std::string task = params.count("Task") ? params.at("Task") : "";
    const std::string session_id = params.count("SessionId") ? params.at("SessionId") : "";

    if (task == "DisambiguateSentences") {
        const std::string text = params.count("InputText") ? params.at("InputText") : "";
        if (text.empty()) return {400, "missing InputText\n"};
        auto outcome = pipeline_.disambiguate(text);
        if (!outcome.ok()) return {400, outcome.error().to_string() + "\n"};
        if (!session_id.empty()) {
            std::lock_guard<std::mutex> lock(sessions_mutex_);
            Session& session = sessions_[session_id];
            session.id = session_id;
            session.has_model = true;
            session.model = outcome.value().output.model;
            session.resolutions = outcome.value().output.resolutions;
            session.tokens = outcome.value().output.tokens;
        }
        return {200, outcome.value().annotated + "\n"};
    }
    if (task == "AnswerQuestion") {
        const std::string question = params.count("InputText") ? params.at("InputText") : "";
        if (question.empty()) return {400, "missing InputText\n"};
        std::lock_guard<std::mutex> lock(sessions_mutex_);
        auto it = sessions_.find(session_id);
        if (session_id.empty() || it == sessions_.end()) {
            return {400, "NoModel: no session with a prior disambiguation\n"};
        }
        auto answer = answer_question(question, it->second, pipeline_.ontology());
        if (!answer.ok()) return {400, answer.error().to_string() + "\n"};
        return {200, answer.value() + "\n"};
    }
    return {400, "unknown task\n"};
}

Result<int> ApiServer::start(int port) {
    int bound = port;
    if (port == 0) {
        bound = impl_->server.bind_to_any_port("127.0.0.1");
        if (bound <= 0) return make_error(ErrorCode::IoError, "cannot bind a port");
    } else {
        if (!impl_->server.bind_to_port("0.0.0.0", port)) {
            return make_error(ErrorCode::IoError, "cannot bind port " + std::to_string(port));
        }
    }
    impl_->port = bound;
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return bound;
}

void ApiServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
    if (impl_ && impl_->thread.joinable()) impl_->thread.join();
}

Result<bool> ApiServer::run(int port) {
    if (!impl_->server.bind_to_port("0.0.0.0", port)) {
        return make_error(ErrorCode::IoError, "cannot bind port " + std::to_string(port));
    }
    impl_->server.listen_after_bind();
    return true;
}

}  // namespace ross::api
