#include <gtest/gtest.h>

#include "nfrs/document.hpp"
#include "support/support.hpp"

using namespace nfrs::store;

namespace {

NfrNode characteristic(const std::string& name)
{
    return {NfrKind::Characteristic, name, std::nullopt, "def", std::nullopt, std::nullopt};
}

NfrNode attribute(const std::string& name)
{
    return {NfrKind::Attribute, name, std::nullopt, "def", std::nullopt, std::nullopt};
}

NfrNode item(const std::string& name)
{
    return {NfrKind::StatementItem, name, std::nullopt, std::nullopt, "decl", std::nullopt};
}

Document small_model()
{
    Document d;
    d = add_node(d, CategoryNode{"Web", std::nullopt, std::nullopt});
    d = add_node(d, EntityNode{"JIRA", std::nullopt, "Web"});
    d = add_node(d, FunctionalRequirementNode{"Login", "s", "r"});
    d = add_node(d, NfrsModelNode{"M", std::nullopt, {}, {}});
    d = add_nfr(d, "M", characteristic("C"));
    d = add_nfr(d, "M", attribute("A"));
    d = add_nfr(d, "M", item("S"));
    return d;
}

} // namespace

TEST(Store, UpdatesLeaveTheInputUntouched)
{
    Document empty;
    auto one = add_node(empty, CategoryNode{"Web", std::nullopt, std::nullopt});
    EXPECT_TRUE(empty.categories.empty());
    EXPECT_EQ(one.categories.size(), 1u);
    auto two = add_model_edge(small_model(), "M", {ModelEdgeKind::Combines, "C", "A"});
    EXPECT_TRUE(small_model().models.at("M").edges.empty());
    EXPECT_EQ(two.models.at("M").edges.size(), 1u);
}

TEST(Store, DuplicateNamesAreRejectedPerKind)
{
    auto d = small_model();
    EXPECT_THROW(add_node(d, CategoryNode{"Web", std::nullopt, std::nullopt}), DuplicateName);
    EXPECT_THROW(add_nfr(d, "M", attribute("C")), DuplicateName);
    // a different kind may reuse a name
    EXPECT_NO_THROW(add_node(d, EntityNode{"Web", std::nullopt, "Web"}));
}

TEST(Store, NfrFieldsFollowTheKind)
{
    auto d = small_model();
    auto bad = item("T");
    bad.declaration.reset();
    EXPECT_THROW(add_nfr(d, "M", bad), InvalidNode);
    auto focus_attr = attribute("B");
    focus_attr.focus = FocusKind::Quality;
    EXPECT_THROW(add_nfr(d, "M", focus_attr), InvalidNode);
    auto no_def = characteristic("D");
    no_def.definition.reset();
    EXPECT_THROW(add_nfr(d, "M", no_def), InvalidNode);
}

TEST(Store, MissingContainerIsNotFound)
{
    EXPECT_THROW(add_nfr(Document{}, "M", attribute("A")), NotFound);
    EXPECT_THROW(add_view(Document{}, "VM", NfrViewNode{}), NotFound);
    EXPECT_THROW(resolve(Document{}, NodeKind::Entity, "JIRA"), NotFound);
}

TEST(Store, ResolveIsKindSegregated)
{
    auto d = small_model();
    auto ref = resolve(d, NodeKind::Entity, "JIRA");
    ASSERT_TRUE(std::holds_alternative<const EntityNode*>(ref));
    EXPECT_EQ(std::get<const EntityNode*>(ref)->category, "Web");
    EXPECT_TRUE(contains(d, NodeKind::Category, "Web"));
    EXPECT_FALSE(contains(d, NodeKind::Entity, "Web"));
}

TEST(Store, EdgeKindsAreCheckedWhenEndpointsResolve)
{
    auto d = small_model();
    EXPECT_THROW(add_model_edge(d, "M", {ModelEdgeKind::Combines, "A", "S"}), EdgeKindMismatch);
    EXPECT_THROW(add_model_edge(d, "M", {ModelEdgeKind::Combines, "C", "C"}), EdgeKindMismatch);
    EXPECT_THROW(add_model_edge(d, "M", {ModelEdgeKind::MapsTo, "A", "A"}), EdgeKindMismatch);
    EXPECT_THROW(add_model_edge(d, "M", {ModelEdgeKind::SubCharacteristic, "C", "A"}),
                 EdgeKindMismatch);
    EXPECT_THROW(add_model_edge(d, "M", {ModelEdgeKind::Satisfies, "A", "JIRA"}), EdgeKindMismatch);
    EXPECT_THROW(add_model_edge(d, "M", {ModelEdgeKind::RefersToEntity, "A", "Web"}),
                 EdgeKindMismatch);
    EXPECT_THROW(add_model_edge(d, "M", {ModelEdgeKind::RefersToCategory, "A", "JIRA"}),
                 EdgeKindMismatch);

    EXPECT_NO_THROW(add_model_edge(d, "M", {ModelEdgeKind::Combines, "C", "S"}));
    EXPECT_NO_THROW(add_model_edge(d, "M", {ModelEdgeKind::MapsTo, "S", "A"}));
    EXPECT_NO_THROW(add_model_edge(d, "M", {ModelEdgeKind::Satisfies, "A", "Login"}));
    EXPECT_NO_THROW(add_model_edge(d, "M", {ModelEdgeKind::RelatesWith, "A", "A"}));
    // unresolved names are the validator's business
    EXPECT_NO_THROW(add_model_edge(d, "M", {ModelEdgeKind::Combines, "C", "Later"}));
    EXPECT_NO_THROW(add_model_edge(d, "M", {ModelEdgeKind::Satisfies, "A", "Later FR"}));
}

TEST(Store, CostViewsTakeNoViewEdges)
{
    Document d = add_node(Document{}, NfrsViewModelNode{"VM", std::nullopt, {}, {}, {}});
    d = add_view(d, "VM", NfrViewNode{"Q", std::nullopt, FocusKind::Quality, std::nullopt, std::nullopt});
    d = add_view(d, "VM", NfrViewNode{"K", std::nullopt, FocusKind::Cost, std::nullopt, std::nullopt});
    EXPECT_THROW(add_view_edge(d, "VM", {"Q", "K"}), EdgeKindMismatch);
    EXPECT_THROW(add_view_edge(d, "VM", {"K", "Q"}, true), EdgeKindMismatch);
    auto ok = add_view_edge(d, "VM", {"Q", "Q2"}, true);
    EXPECT_EQ(ok.view_models.at("VM").depends_on.size(), 1u);
    EXPECT_TRUE(ok.view_models.at("VM").influences.empty());
}

TEST(Store, EqualityIgnoresLocationsAndOrder)
{
    auto a = small_model();
    a = add_model_edge(a, "M", {ModelEdgeKind::Combines, "C", "A"});
    a = add_model_edge(a, "M", {ModelEdgeKind::Combines, "C", "S"});

    Document b;
    b = add_node(b, NfrsModelNode{"M", std::nullopt, {}, {}});
    b = add_nfr(b, "M", item("S"));
    b = add_nfr(b, "M", attribute("A"));
    b = add_nfr(b, "M", characteristic("C"));
    b = add_model_edge(b, "M", {ModelEdgeKind::Combines, "C", "S"});
    b = add_model_edge(b, "M", {ModelEdgeKind::Combines, "C", "A"});
    b = add_node(b, FunctionalRequirementNode{"Login", "s", "r"});
    b = add_node(b, EntityNode{"JIRA", std::nullopt, "Web"});
    b = add_node(b, CategoryNode{"Web", std::nullopt, std::nullopt});
    b.source_locations["category/Web"] = {3, 1};

    EXPECT_EQ(a, b);
    b.entities.at("JIRA").description = "changed";
    EXPECT_NE(a, b);
}

TEST(Store, FocusLookup)
{
    auto d = small_model();
    EXPECT_EQ(d.models.at("M").focus(), nullptr);
    auto f = characteristic("F");
    f.focus = FocusKind::Cost;
    d = add_nfr(d, "M", f);
    ASSERT_NE(d.models.at("M").focus(), nullptr);
    EXPECT_EQ(d.models.at("M").focus()->name, "F");
    auto g = characteristic("G");
    g.focus = FocusKind::Quality;
    d = add_nfr(d, "M", g);
    EXPECT_EQ(d.models.at("M").focus(), nullptr);
}

TEST(Store, SubjectPaths)
{
    EXPECT_EQ(path::nfr("M", "A"), "model/M/nfr/A");
    EXPECT_EQ(path::view("VM", "V"), "view_model/VM/view/V");
    EXPECT_EQ(path::model_edge("M", {ModelEdgeKind::MapsTo, "S", "A"}), "model/M/maps/S->A");
    EXPECT_EQ(path::influences("VM", {"A", "B"}), "view_model/VM/influences/A->B");
}

TEST(Store, KeywordsRoundTrip)
{
    for (auto k : {NfrKind::Attribute, NfrKind::Characteristic, NfrKind::StatementItem})
        EXPECT_EQ(parse_nfr_kind(keyword(k)), k);
    for (auto k : {ModelEdgeKind::SubCharacteristic, ModelEdgeKind::Combines, ModelEdgeKind::MapsTo,
                   ModelEdgeKind::RefersToEntity, ModelEdgeKind::RefersToCategory,
                   ModelEdgeKind::RelatesWith, ModelEdgeKind::Satisfies})
        EXPECT_EQ(parse_model_edge_kind(keyword(k)), k);
    EXPECT_FALSE(parse_focus_kind("speed").has_value());
}
