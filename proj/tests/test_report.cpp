#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "z2h/report.hpp"

using namespace z2h;

namespace {

Report sample_report() {
    Report r;
    r.command = "exists oneform";
    r.inputs = {{"seifert", "0,-1,2:1,3:1,5:1"}};
    r.outputs = {{"exists", "false"}, {"chi_orb", "1/30"}};
    r.citations = {"Prop. 4.11"};
    r.status = ReportStatus::Ok;
    return r;
}

Report random_report(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 6), chr('a', 'z'), st(0, 3);
    auto word = [&]() {
        std::string w;
        const int n = 1 + len(rng);
        for (int i = 0; i < n; ++i) w += static_cast<char>(chr(rng));
        return w;
    };
    Report r;
    r.command = word() + " " + word();
    for (int i = 0; i < len(rng); ++i) r.inputs[word()] = word();
    for (int i = 0; i < len(rng); ++i) r.outputs[word()] = word() + "/" + word();
    for (int i = 0; i < len(rng); ++i) r.citations.push_back("Lemma " + word());
    r.status = static_cast<ReportStatus>(st(rng));
    return r;
}

}  // namespace

TEST_CASE("rationals are preserved verbatim in every format") {
    Report r = sample_report();
    for (auto fmt : {ReportFormat::Plain, ReportFormat::Json, ReportFormat::Csv}) {
        CHECK(emit(r, fmt).find("1/30") != std::string::npos);
    }
}

TEST_CASE("empty outputs emit valid documents") {
    Report r;
    r.command = "noop";
    CHECK_NOTHROW(parse_report(emit(r, ReportFormat::Json)));
    CHECK(emit(r, ReportFormat::Csv).rfind("section,key,value\n", 0) == 0);
    CHECK_FALSE(emit(r, ReportFormat::Plain).empty());
}

TEST_CASE("structured round trip is the identity") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 200; ++i) {
        Report r = random_report(rng);
        Report back = parse_report(emit(r, ReportFormat::Json));
        CHECK(back == r);
    }
}

TEST_CASE("emission is deterministic") {
    Report a = sample_report();
    Report b = sample_report();
    for (auto fmt : {ReportFormat::Plain, ReportFormat::Json, ReportFormat::Csv})
        CHECK(emit(a, fmt) == emit(b, fmt));
}

TEST_CASE("csv escapes commas and quotes") {
    Report r;
    r.command = "x";
    r.outputs["note"] = "a,b \"quoted\"";
    const std::string csv = emit(r, ReportFormat::Csv);
    CHECK(csv.find("\"a,b \"\"quoted\"\"\"") != std::string::npos);
}

TEST_CASE("status strings") {
    CHECK(to_string(ReportStatus::Discrepancy) == "discrepancy");
    CHECK(report_status_from_string("numerical_error") == ReportStatus::NumericalError);
    CHECK_THROWS_AS(report_status_from_string("nope"), std::invalid_argument);
}
