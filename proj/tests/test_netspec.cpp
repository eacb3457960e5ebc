#include "softev/environment.hpp"
#include "softev/error.hpp"
#include "softev/netspec.hpp"
#include "softev/render.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace softev;
using namespace softev::netspec;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::filesystem::path(SOFTEV_CORPUS_DIR) / name);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

const char* kDiseaseNetwork = R"(
space disease = { d, ~d }
space test = { t, ~t }
state prior : disease = { d: 1/100, ~d: 99/100 }
channel sens : disease -> test = {
  d:  { t: 9/10, ~t: 1/10 },
  ~d: { t: 1/20, ~t: 19/20 }
}
)";

std::string first_error(std::string_view source) {
    ParseResult r = parse(source);
    return r.diagnostics.empty() ? "" : r.diagnostics.front().format();
}

std::string compile_error(std::string_view source) {
    try {
        load(source);
    } catch (const LoadError& e) {
        return e.diagnostics().empty() ? "load error" : e.diagnostics().front().format();
    } catch (const ProbError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Parse, DiseaseNetworkHasFourDeclarations) {
    ParseResult r = parse(kDiseaseNetwork);
    ASSERT_TRUE(r.ok()) << first_error(kDiseaseNetwork);
    ASSERT_EQ(r.declarations.size(), 4u);
    EXPECT_EQ(r.declarations[0].name(), "disease");
    EXPECT_EQ(r.declarations[3].name(), "sens");
    const auto& sens = std::get<ChannelDecl>(r.declarations[3].body);
    EXPECT_EQ(sens.rows[1].second[0].second, Rational(1, 20));
}

TEST(Parse, EmptySource) {
    EXPECT_TRUE(parse("").ok());
    EXPECT_TRUE(parse("").declarations.empty());
    EXPECT_TRUE(parse("# only a comment\n\n").declarations.empty());
}

TEST(Parse, WeightSumDiagnostic) {
    std::string source = "space disease = { d, ~d }\nprior : disease = { d: 1/2, ~d: 1/3 }\n";
    // The bare form without the `state` keyword is a syntax error; the
    // weight check applies to state declarations.
    EXPECT_FALSE(parse(source).ok());
    ParseResult r = parse("space disease = { d, ~d }\nstate prior : disease = { d: 1/2, ~d: 1/3 }\n");
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.diagnostics[0].line, 2);
    EXPECT_GT(r.diagnostics[0].column, 0);
    EXPECT_NE(r.diagnostics[0].message.find("weights sum to 5/6, expected 1"), std::string::npos)
        << r.diagnostics[0].message;
}

TEST(Parse, MalformedCorpusFile) {
    ParseResult r = parse(slurp("invalid/malformed_weights.netspec"));
    ASSERT_FALSE(r.ok());
    EXPECT_GT(r.diagnostics[0].line, 0);
    EXPECT_NE(r.diagnostics[0].format().find("weights sum to 5/6, expected 1"), std::string::npos);
}

TEST(Parse, ExactDecimals) {
    ParseResult r = parse("space q = { e, ~e }\nstate p : q = { e: 0.000001, ~e: 0.999999 }\n");
    ASSERT_TRUE(r.ok());
    const auto& p = std::get<StateDecl>(r.declarations[1].body);
    EXPECT_EQ(p.weights[0].second, Rational(1, 1000000));
}

TEST(Parse, Diagnostics) {
    EXPECT_NE(first_error("space a = { x, x }").find("1:"), std::string::npos);
    EXPECT_NE(first_error("space a = { x }\nspace a = { y }").find("2:"), std::string::npos);
    EXPECT_NE(first_error("state p : nowhere = { x: 1 }").find("nowhere"), std::string::npos);
    EXPECT_NE(first_error("space a = { x }\nstate p : a = { z: 1 }").find("z"), std::string::npos);
    EXPECT_NE(first_error("space a = { x, y }\npredicate p : a = { x: 3/2 }").find("2:"), std::string::npos);
    EXPECT_NE(first_error("space a = { x }\nquery q = frobnicate(a)").find("frobnicate"), std::string::npos);
    EXPECT_NE(first_error("space a = { x }\nquery q = transform(nothing, a)").find("nothing"), std::string::npos);
    EXPECT_FALSE(first_error("space a = { x y }").empty());
    EXPECT_FALSE(first_error("space a = { x }\nchannel c : a -> a = { }").empty());
}

TEST(Parse, RecoversAndReportsSeveralErrors) {
    ParseResult r = parse("space a = { x y }\nspace b = { y }\nstate s : b = { y: 2 }\n");
    EXPECT_GE(r.diagnostics.size(), 2u);
}

TEST(RoundTrip, CorpusFiles) {
    for (const char* file : {"disease.netspec", "disease_prior10.netspec", "disease_certainty.netspec",
                             "halpern.netspec", "barber.netspec", "dietrich.netspec"}) {
        ParseResult first = parse(slurp(file));
        ASSERT_TRUE(first.ok()) << file;
        std::string text = render(first.declarations);
        ParseResult second = parse(text);
        ASSERT_TRUE(second.ok()) << file << "\n" << text;
        EXPECT_EQ(first.declarations, second.declarations) << file;
        EXPECT_EQ(render(second.declarations), text) << file;
    }
}

TEST(Compile, DiseaseQueries) {
    Environment env = load(slurp("disease.netspec"));
    EXPECT_EQ(render_value(env.evaluate("pearl_posterior").value), "74/2351|d> + 2277/2351|~d>");
    EXPECT_EQ(std::get<State>(env.evaluate("pearl_posterior").value).weight("d"), Rational(148, 4702));
    EXPECT_EQ(render_value(env.evaluate("prior").value), "1/100|d> + 99/100|~d>");
    EXPECT_EQ(std::get<State>(env.evaluate("jeffrey_posterior").value).weight("d"), Rational(27162, 220311));
}

TEST(Compile, IdentityTransform) {
    Environment env = load(std::string(kDiseaseNetwork) +
                           "function id_channel : disease -> disease = { d: d, ~d: ~d }\n"
                           "query same = transform(id_channel, prior)\n");
    EXPECT_EQ(std::get<State>(env.evaluate("same").value), env.state("prior"));
}

TEST(Compile, BarberJeffreyMarginal) {
    Environment env = load(slurp("barber.netspec"));
    State b = std::get<State>(env.evaluate("jeffrey_burglary").value);
    EXPECT_EQ(render_state(b, {false, 3}), "0.693|b> + 0.307|~b>");
    EXPECT_EQ(std::get<State>(env.evaluate("joint_prior").value).weight("~b,e"), Rational(99, 100000000));
}

TEST(Compile, SpaceMismatchNamesQueryAndPath) {
    std::string message = compile_error(std::string(kDiseaseNetwork) +
                                        "query bad = pearl(prior, sens, condition(prior, truthy))\n");
    EXPECT_FALSE(message.empty());
    std::string mismatch = compile_error(std::string(kDiseaseNetwork) +
                                         "predicate pos : test = { t: 4/5, ~t: 1/5 }\n"
                                         "query wrong = blend(1/2, prior, transform(sens, prior))\n");
    EXPECT_NE(mismatch.find("wrong"), std::string::npos) << mismatch;
    EXPECT_NE(mismatch.find("SpaceMismatch"), std::string::npos) << mismatch;
    EXPECT_NE(mismatch.find("blend"), std::string::npos) << mismatch;
    std::string swapped = compile_error(std::string(kDiseaseNetwork) +
                                        "predicate pos : test = { t: 4/5, ~t: 1/5 }\n"
                                        "query swapped = validity(prior, pos)\n");
    EXPECT_NE(swapped.find("swapped"), std::string::npos) << swapped;
}

TEST(Compile, CheckedQueriesEvaluate) {
    for (const char* file : {"disease.netspec", "disease_prior10.netspec", "disease_certainty.netspec",
                             "halpern.netspec", "barber.netspec", "dietrich.netspec"}) {
        Environment env = load(slurp(file));
        for (const auto& name : env.query_names()) {
            EXPECT_NO_THROW(env.evaluate(name)) << file << " " << name;
        }
    }
}

TEST(Compile, CsvOutput) {
    Environment env = load(slurp("disease.netspec"));
    EXPECT_EQ(to_csv(env.evaluate("pearl_posterior")), "element,value\nd,74/2351\n~d,2277/2351\n");
    EXPECT_EQ(to_csv(env.evaluate("inverted")).substr(0, 14), "from,to,value\n");
}
