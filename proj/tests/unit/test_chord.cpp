#include <chordenum/chord.hpp>

#include <doctest.h>

using namespace chordenum;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InternalInconsistency;
}

} // namespace

TEST_CASE("chord construction validates parts")
{
    CHECK(new_chord({1, 2, 3, 6}).cardinality() == 4);
    CHECK(new_chord({12}).cardinality() == 1);
    CHECK(code_of([] { new_chord({1, 2, 3}); }) == ErrorCode::SumMismatch);
    CHECK(code_of([] { new_chord({0, 12}); }) == ErrorCode::NonPositivePart);
    CHECK(code_of([] { new_chord({}); }) == ErrorCode::EmptyChord);
    CHECK(code_of([] { TemperamentParams{0}; }) == ErrorCode::InvalidTemperament);
    CHECK(code_of([] { TemperamentParams{kMaxTemperament + 1}; }) == ErrorCode::InvalidTemperament);
    CHECK(new_chord({3, 4}, TemperamentParams{7}).temperament() == 7);
}

TEST_CASE("transpose rotates left")
{
    const Chord c{1, 2, 3, 6};
    CHECK(transpose(c, 1) == Chord{2, 3, 6, 1});
    CHECK(transpose(c, 0) == c);
    CHECK(transpose(c, 4) == c);
    CHECK(transpose(c, -1) == Chord{6, 1, 2, 3});
}

TEST_CASE("reflect reverses")
{
    CHECK(reflect(Chord{1, 2, 3, 6}) == Chord{6, 3, 2, 1});
    CHECK(reflect(Chord{1, 5, 5, 1}) == Chord{1, 5, 5, 1});
}

TEST_CASE("prime form takes the largest last part then the least tuple")
{
    for (const Chord c : {Chord{1, 2, 9}, Chord{2, 9, 1}, Chord{9, 1, 2}, Chord{1, 9, 2}, Chord{9, 2, 1},
                          Chord{2, 1, 9}})
        CHECK(prime_form(c, SymmetryMode::Dihedral) == Chord{1, 2, 9});
    CHECK(prime_form(Chord{5, 1, 5, 1}, SymmetryMode::Cyclic) == Chord{1, 5, 1, 5});
    CHECK(prime_form(Chord{12}, SymmetryMode::Cyclic) == Chord{12});
    CHECK(prime_form(Chord{2, 9, 1}, SymmetryMode::Cyclic) == Chord{1, 2, 9});
    CHECK(prime_form(Chord{1, 9, 2}, SymmetryMode::Cyclic) == Chord{2, 1, 9});
}

TEST_CASE("chord type counts interval multiplicities")
{
    CHECK(chord_type(Chord{1, 5, 1, 5}).entries == std::vector<ChordType::Entry>{{1, 2}, {5, 2}});
    CHECK(chord_type(Chord{12}).entries == std::vector<ChordType::Entry>{{12, 1}});
    CHECK(chord_type(Chord{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}).entries == std::vector<ChordType::Entry>{{1, 12}});
}
