#include <gtest/gtest.h>

#include <cattab/cli/serialize.hpp>

using namespace cattab;
using namespace cattab::cli;

namespace {

template <class T>
void expect_roundtrip(const T& x, object_kind kind)
{
    const serialized_object o = x;
    ASSERT_EQ(kind_of(o), kind);
    ASSERT_EQ(parse_object(kind, to_json(o).dump()), o) << to_json(o).dump();
    ASSERT_EQ(parse_object(kind, to_tagged_json(o).dump()), o);
}

} // namespace

TEST(Serialize, WireFormats)
{
    EXPECT_EQ(to_json(make_tableau(3, 2, {{0}, {1}})).dump(), R"({"index":3,"k":2,"parts":[1,1],"filling":[[0],[1]]})");
    EXPECT_EQ(to_json(make_tableau(2, 2, {})).dump(), R"({"index":2,"k":2,"parts":[],"filling":[]})");
    EXPECT_EQ(to_json(binary_tree::node(binary_tree::leaf(), {})).dump(), R"({"l":{"l":null,"r":null},"r":null})");
    EXPECT_EQ(to_json(lattice_path("NE")).dump(), R"("NE")");
    EXPECT_EQ(to_json(path_pair{lattice_path("NE"), lattice_path("EN")}).dump(), R"({"omega":"NE","eta":"EN"})");
    EXPECT_EQ(to_json(dyck_word{"UDD"}).dump(), R"("UDD")");
    EXPECT_EQ(to_json(polyomino{{{2, 0}, {3, 1}}}).dump(), R"({"cols":[[2],[3,1]]})");
    const distribution d{1, {rational(2, 5), rational(3, 5)}};
    EXPECT_EQ(to_json(d).dump(), R"([{"state":"0","p":"2/5"},{"state":"1","p":"3/5"}])");
    EXPECT_EQ(to_tagged_json(serialized_object{lattice_path("N")}).dump(), R"({"kind":"path","value":"N"})");
}

TEST(Serialize, TextForms)
{
    EXPECT_EQ(to_text(make_tableau(3, 2, {{0}, {1}})), "index=3 k=2 rows=0/1");
    EXPECT_EQ(to_text(make_tableau(1, 1, {})), "index=1 k=1 rows=-");
    EXPECT_EQ(to_text(binary_tree::leaf()), "(..)");
    EXPECT_EQ(to_text(polyomino{{{2, 0}, {3, 1}}}), "2 1|3");
    EXPECT_EQ(to_text(distribution{1, {rational(2, 5), rational(3, 5)}}), "0:2/5\n1:3/5");
}

TEST(Serialize, RoundtripEverythingUpToEight)
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& t : enumerate_tableaux(n)) {
            expect_roundtrip(t, object_kind::tableau);
            expect_roundtrip(tableau_to_pair_direct(t), object_kind::pair);
            expect_roundtrip(profile(t), object_kind::path);
        }
        for (const auto& b : enumerate_trees(n)) {
            expect_roundtrip(b, object_kind::tree);
            const auto w = tree_to_dyck(b);
            expect_roundtrip(w, object_kind::dyck);
            expect_roundtrip(dyck_to_polyomino(w), object_kind::polyomino);
        }
    }
    for (int n = 1; n <= 4; ++n) {
        expect_roundtrip(tasep_distribution(n, {rational(1, 3), rational(1, 2)}, tasep_method::chain),
                         object_kind::distribution);
    }
}

TEST(Serialize, ParseErrors)
{
    EXPECT_THROW(parse_object(object_kind::path, "not json"), parse_error);
    EXPECT_THROW(parse_object(object_kind::path, "3"), parse_error);
    EXPECT_THROW(parse_object(object_kind::tableau, R"({"index":2})"), parse_error);
    EXPECT_THROW(parse_object(object_kind::tree, R"({"l":null})"), parse_error);
    EXPECT_THROW(parse_object(object_kind::polyomino, R"({"cols":[[1,0]]})"), parse_error);
    EXPECT_THROW(parse_object(object_kind::tree, R"({"kind":"path","value":"N"})"), parse_error);
    EXPECT_THROW(parse_object(object_kind::distribution, R"([{"state":"0","p":"0.5"},{"state":"1","p":"1/2"}])"),
                 parse_error);
}

TEST(Serialize, InvalidObjects)
{
    EXPECT_THROW(parse_object(object_kind::tableau, R"({"index":2,"k":1,"parts":[1],"filling":[[0]]})"), invalid_object);
    EXPECT_THROW(parse_object(object_kind::tableau, R"({"index":2,"k":1,"parts":[1],"filling":[[2]]})"), invalid_object);
    EXPECT_THROW(parse_object(object_kind::path, R"("NX")"), invalid_object);
    EXPECT_THROW(parse_object(object_kind::pair, R"({"omega":"EN","eta":"NE"})"), invalid_object);
    EXPECT_THROW(parse_object(object_kind::dyck, R"("DUD")"), invalid_object);
    EXPECT_THROW(parse_object(object_kind::polyomino, R"({"cols":[[1],[2,2]]})"), invalid_object);
    EXPECT_THROW(parse_object(object_kind::distribution, R"([{"state":"0","p":"1/2"}])"), invalid_object);
    EXPECT_THROW(parse_object(object_kind::distribution, R"([{"state":"0","p":"1/2"},{"state":"1","p":"1/3"}])"),
                 invalid_object);
}

TEST(Serialize, KindNames)
{
    EXPECT_EQ(parse_kind("polyomino"), object_kind::polyomino);
    EXPECT_FALSE(parse_kind("tableaux"));
}
