#include <doctest.h>

#include <set>

#include "xsecdb/error.hpp"
#include "xsecdb/xupdate.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace xsecdb;

namespace {

PathExpr path(const std::string& text) { return parse_xpath(text); }

std::set<NodeId> all_ids(const Document& doc) {
  std::set<NodeId> out;
  for (const auto& [id, label] : doc.facts()) out.insert(id);
  return out;
}

}  // namespace

TEST_SUITE("xupdate") {

TEST_CASE("rename relabels exactly the addressed nodes") {
  Document doc = fixtures::hospital();
  Document renamed = apply_rename(doc, path("//service"), "department");
  CHECK(renamed.label_of(fixtures::n3()) == "department");
  CHECK(renamed.label_of(fixtures::n8()) == "department");
  CHECK(renamed.label_of(fixtures::n1()) == "patients");
  CHECK(renamed.label_of(fixtures::n2()) == "franck");
  CHECK(renamed.label_of(fixtures::n4()) == "otolarynology");
  CHECK(renamed.label_of(fixtures::n5()) == "diagnosis");
  CHECK(renamed.label_of(fixtures::n6()) == "tonsillitis");
  CHECK(renamed.label_of(fixtures::n7()) == "robert");
  CHECK(all_ids(renamed) == all_ids(doc));
}

TEST_CASE("rename with an empty match is the identity") {
  Document doc = fixtures::hospital();
  Document same = apply_rename(doc, path("//nosuch"), "x");
  CHECK(same.facts() == doc.facts());
}

TEST_CASE("renaming everything but the document node") {
  Document doc = fixtures::hospital();
  Document renamed = apply_rename(doc, path("//*"), "x");
  for (const auto& [id, label] : renamed.facts())
    CHECK(label == (id.is_document() ? "/" : "x"));
}

TEST_CASE("the document node cannot be renamed or removed") {
  Document doc = fixtures::hospital();
  CHECK_THROWS_AS(apply_rename(doc, path("/"), "x"), Error);
  CHECK_THROWS_AS(apply_remove(doc, path("/")), Error);
}

TEST_CASE("update relabels the children of addressed nodes") {
  Document doc = fixtures::hospital();
  Document updated =
      apply_update(doc, path("/patients/franck/diagnosis"), "pharyngitis");
  CHECK(updated.label_of(fixtures::n6()) == "pharyngitis");
  CHECK(updated.label_of(fixtures::n5()) == "diagnosis");
  CHECK(updated.label_of(fixtures::n11()) == "penumonia");

  // leaves have no children: identity
  Document same = apply_update(doc, path("//tonsillitis"), "x");
  CHECK(same.facts() == doc.facts());

  Document both = apply_update(doc, path("/patients"), "anonymous");
  CHECK(both.label_of(fixtures::n2()) == "anonymous");
  CHECK(both.label_of(fixtures::n7()) == "anonymous");
}

TEST_CASE("insert-before materializes the albert record with exact identifiers") {
  Document doc = fixtures::hospital();
  Document grown = apply_insert(doc, Placement::InsertBefore,
                                path("/patients/robert"), fixtures::albert_tree());
  CHECK(grown.size() == doc.size() + 4);
  CHECK(grown.label_of(fixtures::albert_id()) == "albert");
  CHECK(grown.label_of(fixtures::albert_service_id()) == "service");
  CHECK(grown.label_of(fixtures::albert_diagnosis_id()) == "diagnosis");
  CHECK(grown.label_of(fixtures::albert_cardiology_id()) == "cardiology");
  for (const auto& [id, label] : doc.facts()) {
    REQUIRE(grown.contains(id));
    CHECK(grown.label_of(id) == label);
  }
}

TEST_CASE("insert with an empty match is the identity") {
  Document doc = fixtures::hospital();
  Document same = apply_insert(doc, Placement::Append, path("//nosuch"),
                               LabelTree{"x", {}});
  CHECK(same.facts() == doc.facts());
}

TEST_CASE("append inserts one copy per addressed node") {
  Document doc = fixtures::hospital();
  LabelTree tree{"x", {LabelTree{"y", {}}}};
  Document grown = apply_insert(doc, Placement::Append, path("//service"), tree);
  CHECK(grown.size() == doc.size() + 2 * tree_size(tree));
  // each service node now carries an x child
  for (const NodeId& service : {fixtures::n3(), fixtures::n8()}) {
    bool found = false;
    for (const NodeId& child : grown.children(service))
      if (grown.label_of(child) == "x") found = true;
    CHECK(found);
  }
}

TEST_CASE("sibling insertion at the root or document node is rejected") {
  Document doc = fixtures::hospital();
  CHECK_THROWS_AS(apply_insert(doc, Placement::InsertBefore, path("/patients"),
                               LabelTree{"x", {}}),
                  Error);
  CHECK_THROWS_AS(apply_insert(doc, Placement::InsertAfter, path("/"),
                               LabelTree{"x", {}}),
                  Error);
}

TEST_CASE("remove drops whole subtrees") {
  Document doc = fixtures::hospital();
  Document pruned = apply_remove(doc, path("/patients/franck/diagnosis"));
  CHECK_FALSE(pruned.contains(fixtures::n5()));
  CHECK_FALSE(pruned.contains(fixtures::n6()));
  CHECK(pruned.size() == doc.size() - 2);
  CHECK(pruned.contains(fixtures::n3()));
  CHECK(pruned.contains(fixtures::n10()));

  Document same = apply_remove(doc, path("//nosuch"));
  CHECK(same.facts() == doc.facts());

  Document bare = apply_remove(doc, path("/*"));
  CHECK(bare.size() == 1);
  CHECK(bare.contains(NodeId::document()));
}

TEST_CASE("operations are deterministic") {
  Document doc = fixtures::hospital();
  UpdateOp op{UpdateKind::InsertAfter, path("//diagnosis"), "",
              LabelTree{"note", {}}};
  Document a = apply_op(doc, op);
  Document b = apply_op(doc, op);
  CHECK(a.facts() == b.facts());
}

TEST_CASE("node-count accounting") {
  testsupport::Rng rng(43);
  for (int round = 0; round < 30; ++round) {
    Document doc = testsupport::random_document(rng, 15);
    PathExpr p = parse_xpath(testsupport::random_path(rng));

    NodeSet addressed = eval_xpath(p, doc);
    bool touches_root_slot = false;
    for (const NodeFact& fact : addressed)
      if (fact.id.is_document() || fact.id.is_root()) touches_root_slot = true;

    Document renamed = apply_rename(doc, p, "zz");
    CHECK(renamed.size() == doc.size());

    if (!touches_root_slot) {
      LabelTree tree = testsupport::random_tree(rng, 3);
      Document grown = apply_insert(doc, Placement::InsertAfter, p, tree);
      CHECK(grown.size() == doc.size() + addressed.size() * tree_size(tree));
    }
  }
}

}  // TEST_SUITE
