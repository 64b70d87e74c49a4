#include <gtest/gtest.h>

#include <set>

#include "hermes/endpoint_reducer.hpp"
#include "hermes/error.hpp"
#include "random_openapi.hpp"
#include "reducer_laws.hpp"
#include "test_paths.hpp"

using namespace hermes;

namespace {

const EndpointRef kCreateOrder{HttpMethod::Get, "/orders/createNewOrder"};

Document order_api() {
    return parse_document(testkit::read_text(testkit::data_dir() / "order_api.json"));
}

std::set<std::string> names(const std::map<std::string, Schema>& m) {
    std::set<std::string> out;
    for (const auto& [k, v] : m) out.insert(k);
    return out;
}

}  // namespace

TEST(EndpointReducer, OrderApiClosure) {
    const auto doc = order_api();
    const auto re = reduce_endpoint(doc, kCreateOrder);
    EXPECT_EQ(names(re.schema_closure), (std::set<std::string>{"CreateOrderRequest", "GenericResponse"}));
    EXPECT_TRUE(re.broken_refs.empty());
    EXPECT_TRUE(re.security.empty());
    EXPECT_EQ(re.api_title, "Order Management API");
    EXPECT_EQ(re.summary, "Create order");

    const auto reduced = json::parse(re.reduced_json);
    EXPECT_EQ(reduced["info"], json({{"title", "Order Management API"}, {"version", "1.2.0"}}));
    EXPECT_EQ(reduced["paths"].size(), 1u);
    EXPECT_EQ(reduced["paths"]["/orders/createNewOrder"].size(), 1u);
    EXPECT_FALSE(reduced["components"].contains("securitySchemes"));
}

TEST(EndpointReducer, UnknownEndpoint) {
    const auto doc = order_api();
    try {
        reduce_endpoint(doc, EndpointRef{HttpMethod::Post, "/orders/createNewOrder"});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownEndpoint);
    }
}

TEST(EndpointReducer, InlineOnlyEndpoint) {
    const auto doc = parse_document(R"({"openapi":"3.0.0","info":{"title":"t","version":"1"},"paths":{
        "/a":{"get":{"responses":{"200":{"description":"ok","content":{"application/json":{"schema":{"type":"string"}}}}}}}},
        "components":{"schemas":{"Unused":{"type":"object"}}}})");
    const auto closure = collect_schema_closure(doc, EndpointRef{HttpMethod::Get, "/a"});
    EXPECT_TRUE(closure.schemas.empty());
    EXPECT_TRUE(closure.broken_refs.empty());
    const auto reduced = json::parse(reduce_endpoint(doc, EndpointRef{HttpMethod::Get, "/a"}).reduced_json);
    EXPECT_FALSE(reduced.contains("components"));
}

TEST(EndpointReducer, TwoHopBrokenRef) {
    const auto doc = parse_document(R"({"openapi":"3.0.0","info":{"title":"t","version":"1"},"paths":{
        "/a":{"get":{"responses":{"200":{"description":"ok","content":{"application/json":{"schema":{"$ref":"#/components/schemas/A"}}}}}}}},
        "components":{"schemas":{"A":{"type":"object","properties":{"b":{"$ref":"#/components/schemas/B"}}}}}})");
    const auto re = reduce_endpoint(doc, EndpointRef{HttpMethod::Get, "/a"});
    EXPECT_EQ(names(re.schema_closure), std::set<std::string>{"A"});
    EXPECT_EQ(re.broken_refs, std::vector<std::string>{"#/components/schemas/B"});
}

TEST(EndpointReducer, CycleTerminates) {
    const auto doc = parse_document(R"({"openapi":"3.0.0","info":{"title":"t","version":"1"},"paths":{
        "/a":{"get":{"responses":{"200":{"description":"ok","content":{"application/json":{"schema":{"$ref":"#/components/schemas/A"}}}}}}}},
        "components":{"schemas":{
          "A":{"type":"object","properties":{"b":{"$ref":"#/components/schemas/B"}}},
          "B":{"type":"array","items":{"$ref":"#/components/schemas/A"}}}}})");
    const auto closure = collect_schema_closure(doc, EndpointRef{HttpMethod::Get, "/a"});
    EXPECT_EQ(names(closure.schemas), (std::set<std::string>{"A", "B"}));
    EXPECT_TRUE(closure.broken_refs.empty());
}

TEST(EndpointReducer, BrokenRefsAreSortedAndDeduplicated) {
    const auto doc = parse_document(R"({"openapi":"3.0.0","info":{"title":"t","version":"1"},"paths":{
        "/a":{"post":{
          "requestBody":{"content":{"application/json":{"schema":{"$ref":"#/components/schemas/Z"}}}},
          "responses":{
            "200":{"description":"ok","content":{"application/json":{"schema":{"$ref":"#/components/schemas/Z"}}}},
            "400":{"description":"bad","content":{"application/json":{"schema":{"$ref":"ext.yaml#/E"}}}}}}}}})");
    const auto re = reduce_endpoint(doc, EndpointRef{HttpMethod::Post, "/a"});
    EXPECT_EQ(re.broken_refs, (std::vector<std::string>{"#/components/schemas/Z", "ext.yaml#/E"}));
}

TEST(EndpointReducer, EffectiveSecurity) {
    const char* base = R"({"openapi":"3.0.0","info":{"title":"t","version":"1"},
        "security":[{"bearer":[]}],
        "components":{"securitySchemes":{"bearer":{"type":"http","scheme":"bearer"},"key":{"type":"apiKey","in":"header","name":"K"}}},
        "paths":{
          "/inherit":{"get":{"responses":{}}},
          "/override":{"get":{"security":[{"key":[]}],"responses":{}}},
          "/public":{"get":{"security":[],"responses":{}}}}})";
    const auto doc = parse_document(base);

    const auto inherit = reduce_endpoint(doc, EndpointRef{HttpMethod::Get, "/inherit"});
    ASSERT_EQ(inherit.security.size(), 1u);
    EXPECT_TRUE(inherit.security[0].contains("bearer"));
    EXPECT_TRUE(inherit.security_schemes_used.contains("bearer"));
    EXPECT_FALSE(inherit.security_schemes_used.contains("key"));

    const auto over = reduce_endpoint(doc, EndpointRef{HttpMethod::Get, "/override"});
    ASSERT_EQ(over.security.size(), 1u);
    EXPECT_TRUE(over.security[0].contains("key"));
    EXPECT_FALSE(over.security_schemes_used.contains("bearer"));

    const auto pub = reduce_endpoint(doc, EndpointRef{HttpMethod::Get, "/public"});
    EXPECT_TRUE(pub.security.empty());
    EXPECT_TRUE(pub.security_schemes_used.empty());
}

TEST(EndpointReducer, PathLevelAndComponentParameters) {
    const auto doc = parse_document(R"({"openapi":"3.0.0","info":{"title":"t","version":"1"},
        "components":{"parameters":{"Limit":{"name":"limit","in":"query","schema":{"type":"integer"}}}},
        "paths":{"/a/{id}":{
          "parameters":[{"name":"id","in":"path","required":true,"schema":{"type":"string"}},
                        {"name":"v","in":"query","schema":{"type":"string"}}],
          "get":{"parameters":[{"$ref":"#/components/parameters/Limit"},
                               {"name":"v","in":"query","description":"override","schema":{"type":"string"}}],
                 "responses":{}}}}})");
    const auto re = reduce_endpoint(doc, EndpointRef{HttpMethod::Get, "/a/{id}"});
    ASSERT_EQ(re.parameters.size(), 3u);
    std::map<std::string, Parameter> by_name;
    for (const auto& p : re.parameters) by_name[p.name] = p;
    EXPECT_TRUE(by_name.contains("limit"));
    EXPECT_EQ(by_name.at("v").description, "override");
    EXPECT_TRUE(re.broken_refs.empty());
    const auto reduced = json::parse(re.reduced_json);
    EXPECT_TRUE(reduced["components"]["parameters"].contains("Limit"));
}

TEST(EndpointReducer, SizeWarning) {
    const auto doc = order_api();
    ReducerOptions opts;
    opts.size_warning_bytes = 64;
    const auto re = reduce_endpoint(doc, kCreateOrder, opts);
    ASSERT_FALSE(re.warnings.empty());
    EXPECT_NE(re.warnings.back().find("bytes"), std::string::npos);
    EXPECT_TRUE(reduce_endpoint(doc, kCreateOrder).warnings.empty());
}

TEST(EndpointReducer, ReduceIsIdempotentOnOrderApi) {
    const auto re = reduce_endpoint(order_api(), kCreateOrder);
    const auto again = reduce_endpoint(parse_document(re.reduced_json), kCreateOrder);
    EXPECT_EQ(again.reduced_json, re.reduced_json);
}

TEST(EndpointReducer, CollectRefs) {
    const auto refs = collect_refs(json::parse(R"({"a":{"$ref":"#/x"},"b":[{"$ref":"#/y"},{"c":{"$ref":"#/z"}}],"$ref":5})"));
    EXPECT_EQ(refs.size(), 3u);
}

TEST(EndpointReducerProperty, LawsOnGeneratedCorpus) {
    std::size_t endpoints = 0;
    for (std::uint32_t seed = 0; seed < 150; ++seed) {
        testkit::RandomOpenApi gen(seed);
        auto raw = gen.document();
        const auto failures = testkit::check_reducer_laws(raw, gen, static_cast<int>(seed), endpoints);
        ASSERT_TRUE(failures.empty()) << "seed " << seed << ": " << failures.front();
    }
    EXPECT_GT(endpoints, 200u);
}
