#include <gtest/gtest.h>

#include "keyfactor/chain_dsl.hpp"
#include "keyfactor/rapex.hpp"

using namespace keyfactor;

TEST(ImportRapex, OneSkeletonPerRisk) {
    const AlertRecord hair_dryer{"A12/02261/23", "hair dryer", {"burn", "electric shock", "fire"},
                                 "Insulation is insufficient.\nLive parts are accessible."};
    const auto result = import_rapex({hair_dryer});
    EXPECT_TRUE(result.warnings.empty());
    ASSERT_EQ(result.documents.size(), 3u);
    EXPECT_EQ(result.documents[0].file_name, "a12-02261-23_burn.chains");
    EXPECT_EQ(result.documents[1].file_name, "a12-02261-23_electric-shock.chains");
    EXPECT_EQ(result.documents[2].file_name, "a12-02261-23_fire.chains");

    const auto &doc = result.documents[1].document;
    EXPECT_NE(doc.find("# Insulation is insufficient.\n# Live parts are accessible.\n"), std::string::npos);
    EXPECT_NE(doc.find("alert: A12/02261/23\ncase: electric shock\nharm \"electric shock\"\n"), std::string::npos);

    // The skeleton parses; it only lacks the analyst-authored steps.
    const auto parsed = parse_document(doc);
    ASSERT_EQ(parsed.diagnostics.size(), 1u);
    EXPECT_NE(parsed.diagnostics[0].message.find("TooShort"), std::string::npos);
}

TEST(ImportRapex, NoRiskTypeGivesUnspecifiedCase) {
    const auto result = import_rapex({AlertRecord{"A1", "kettle", {}, ""}});
    ASSERT_EQ(result.documents.size(), 1u);
    const auto &doc = result.documents[0].document;
    EXPECT_NE(doc.find("case: unspecified\n"), std::string::npos);
    EXPECT_EQ(doc.find("\nharm "), std::string::npos);
    EXPECT_NE(doc.find("# WARNING"), std::string::npos);
}

TEST(ImportRapex, DuplicatePairsAreDropped) {
    const AlertRecord a{"A1", "dryer", {"burn"}, ""};
    const AlertRecord b{"A1", "dryer", {"burn", "fire"}, ""};
    const auto result = import_rapex({a, b});
    ASSERT_EQ(result.documents.size(), 2u);
    ASSERT_EQ(result.warnings.size(), 1u);
    EXPECT_NE(result.warnings[0].find("A1"), std::string::npos);
}

TEST(ImportRapex, FileNamesStayUnique) {
    // Distinct alerts that sanitize to the same stem.
    const auto result = import_rapex({AlertRecord{"A1/2", "", {"burn"}, ""}, AlertRecord{"A1-2", "", {"burn"}, ""}});
    ASSERT_EQ(result.documents.size(), 2u);
    EXPECT_NE(result.documents[0].file_name, result.documents[1].file_name);
}

TEST(ReadAlertRecords, DefaultAndMappedFields) {
    const auto recs = read_alert_records(
        R"([{"alertNumber":"A12/02261/23","product":"hair dryer","risk":"Burns, Electric shock; Fire","description":"d"}])");
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].risk_types, (std::vector<std::string>{"Burns", "Electric shock", "Fire"}));

    AlertFieldMap map;
    map.alert_number = "reference";
    map.risk = "riskType";
    const auto mapped = read_alert_records(R"([{"reference":"X1","riskType":["burn"]}])", map);
    ASSERT_EQ(mapped.size(), 1u);
    EXPECT_EQ(mapped[0].alert_number, "X1");
    EXPECT_TRUE(mapped[0].product.empty());
}

TEST(ReadAlertRecords, Errors) {
    EXPECT_TRUE(read_alert_records("[]").empty());
    try {
        read_alert_records("{not json");
        FAIL();
    } catch (const AlertFormatError &e) {
        EXPECT_TRUE(e.document_level());
    }
    try {
        read_alert_records(R"([{"alertNumber":"A1"}, {"product":"no number"}])");
        FAIL();
    } catch (const AlertFormatError &e) {
        EXPECT_EQ(e.record_index(), 1u);
    }
    EXPECT_THROW(read_alert_records(R"([{"alertNumber":"A1","risk":7}])"), AlertFormatError);
    EXPECT_THROW(read_alert_records(R"([3])"), AlertFormatError);
}
