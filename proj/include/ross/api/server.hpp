#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "ross/api/pipeline.hpp"
#include "ross/api/qa.hpp"

namespace ross::api {

// Form-encoded POST service on both /ServerMethod.NLUTask and
// /ServerSideTask.NLUTask. Task=DisambiguateSentences returns the annotated
// sentence as text/plain; Task=AnswerQuestion answers against the SessionId's
// retained model; unknown tasks are client errors.
class ApiServer {
public:
    explicit ApiServer(Pipeline pipeline);
    ~ApiServer();

    ApiServer(const ApiServer&) = delete;
    ApiServer& operator=(const ApiServer&) = delete;

    // Starts in a background thread; port 0 binds an ephemeral port. Returns
    // the bound port.
    Result<int> start(int port);
    void stop();

    // Blocking variant for the CLI.
    Result<bool> run(int port);

    // Request handling, exposed for in-process tests.
    struct Response {
        int status = 200;
        std::string body;
    };
    Response handle(const std::string& body);

private:
    Pipeline pipeline_;
    std::mutex sessions_mutex_;
    std::map<std::string, Session> sessions_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// application/x-www-form-urlencoded body; raw spaces are accepted as-is.
std::map<std::string, std::string> parse_form_body(const std::string& body);

}  // namespace ross::api
