#pragma once

// Scripted OpenAI-compatible chat endpoint on 127.0.0.1 for transport and
// end-to-end tests.

#include <atomic>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

namespace hermes::testkit {

struct MockReply {
    int status = 200;
    std::string content;  // assistant text when status is 200
    std::string raw_body;  // sent verbatim instead of a completion when non-empty
};

class MockChatServer {
public:
    using Script = std::function<MockReply(const std::string& prompt, int call_index)>;

    explicit MockChatServer(Script script) : script_(std::move(script)) {
        server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                   httplib::Response& res) {
            const auto body = nlohmann::json::parse(req.body, nullptr, false);
            std::string prompt;
            if (!body.is_discarded()) {
                prompt = body["messages"][0]["content"].get<std::string>();
            }
            int index = 0;
            {
                std::lock_guard lock(mutex_);
                index = static_cast<int>(requests_.size());
                requests_.push_back(body);
                auth_headers_.push_back(req.get_header_value("Authorization"));
            }
            const auto reply = script_(prompt, index);
            res.status = reply.status;
            if (!reply.raw_body.empty()) {
                res.set_content(reply.raw_body, "application/json");
            } else if (reply.status == 200) {
                nlohmann::json completion = {
                    {"choices",
                     nlohmann::json::array({{{"index", 0},
                                             {"message",
                                              {{"role", "assistant"}, {"content", reply.content}}}}})}};
                res.set_content(completion.dump(), "application/json");
            } else {
                res.set_content(R"({"error":"scripted failure"})", "application/json");
            }
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~MockChatServer() {
        server_.stop();
        if (thread_.joinable()) thread_.join();
    }

    MockChatServer(const MockChatServer&) = delete;
    MockChatServer& operator=(const MockChatServer&) = delete;

    std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }

    std::size_t request_count() const {
        std::lock_guard lock(mutex_);
        return requests_.size();
    }

    std::vector<nlohmann::json> requests() const {
        std::lock_guard lock(mutex_);
        return requests_;
    }

    std::vector<std::string> auth_headers() const {
        std::lock_guard lock(mutex_);
        return auth_headers_;
    }

private:
    Script script_;
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    mutable std::mutex mutex_;
    std::vector<nlohmann::json> requests_;
    std::vector<std::string> auth_headers_;
};

}  // namespace hermes::testkit
