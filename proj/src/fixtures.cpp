#include "icl/fixtures.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "icl/analysis.hpp"
#include "icl/construct.hpp"
#include "icl/serialize.hpp"

namespace icl {

namespace {

// Expected problems and codes for worked examples 1-7 at each lift multiplicity,
// symbol for symbol (supports sorted). Example 6 at m=2 includes offset 18
// (= base K), which every lifted pattern carries.
constexpr DemoFixture kFixtures[] = {
    {1, 1,
     R"json({"version":1,"k":20,"antidotes":[[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4]]})json",
     R"json({"version":1,"k":20,"length":16,"symbols":[[1,5],[2,6],[3,7],[4,8],[5,9],[6,10],[7,11],[8,12],[9,13],[10,14],[11,15],[12,16],[13,17],[14,18],[15,19],[16,20]]})json"},
    {1, 2,
     R"json({"version":1,"k":40,"antidotes":[[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24],[4,20,24]]})json",
     R"json({"version":1,"k":40,"length":16,"symbols":[[1,5,21,25],[2,6,22,26],[3,7,23,27],[4,8,24,28],[5,9,25,29],[6,10,26,30],[7,11,27,31],[8,12,28,32],[9,13,29,33],[10,14,30,34],[11,15,31,35],[12,16,32,36],[13,17,33,37],[14,18,34,38],[15,19,35,39],[16,20,36,40]]})json"},
    {1, 3,
     R"json({"version":1,"k":60,"antidotes":[[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44],[4,20,24,40,44]]})json",
     R"json({"version":1,"k":60,"length":16,"symbols":[[1,5,21,25,41,45],[2,6,22,26,42,46],[3,7,23,27,43,47],[4,8,24,28,44,48],[5,9,25,29,45,49],[6,10,26,30,46,50],[7,11,27,31,47,51],[8,12,28,32,48,52],[9,13,29,33,49,53],[10,14,30,34,50,54],[11,15,31,35,51,55],[12,16,32,36,52,56],[13,17,33,37,53,57],[14,18,34,38,54,58],[15,19,35,39,55,59],[16,20,36,40,56,60]]})json"},
    {2, 1,
     R"json({"version":1,"k":21,"antidotes":[[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17]]})json",
     R"json({"version":1,"k":21,"length":4,"symbols":[[1,5,9,13,17,21],[2,6,10,14,18,21],[3,7,11,15,19,21],[4,8,12,16,20,21]]})json"},
    {2, 2,
     R"json({"version":1,"k":42,"antidotes":[[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38]]})json",
     R"json({"version":1,"k":42,"length":4,"symbols":[[1,5,9,13,17,21,22,26,30,34,38,42],[2,6,10,14,18,21,23,27,31,35,39,42],[3,7,11,15,19,21,24,28,32,36,40,42],[4,8,12,16,20,21,25,29,33,37,41,42]]})json"},
    {3, 1,
     R"json({"version":1,"k":28,"antidotes":[[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18]]})json",
     R"json({"version":1,"k":28,"length":10,"symbols":[[1,11,21,23,25,27],[2,12,22,24,26,28],[3,13,21],[4,14,22],[5,15,23],[6,16,24],[7,17,25],[8,18,26],[9,19,21,23,25,27],[10,20,22,24,26,28]]})json"},
    {3, 2,
     R"json({"version":1,"k":56,"antidotes":[[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46],[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46]]})json",
     R"json({"version":1,"k":56,"length":10,"symbols":[[1,11,21,23,25,27,29,39,49,51,53,55],[2,12,22,24,26,28,30,40,50,52,54,56],[3,13,21,31,41,49],[4,14,22,32,42,50],[5,15,23,33,43,51],[6,16,24,34,44,52],[7,17,25,35,45,53],[8,18,26,36,46,54],[9,19,21,23,25,27,37,47,49,51,53,55],[10,20,22,24,26,28,38,48,50,52,54,56]]})json"},
    {4, 1,
     R"json({"version":1,"k":20,"antidotes":[[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8],[2,4,6,8]]})json",
     R"json({"version":1,"k":20,"length":12,"symbols":[[1,3,5,7,9],[2,4,6,8,10],[3,5,7,9,11],[4,6,8,10,12],[5,7,9,11,13],[6,8,10,12,14],[7,9,11,13,15],[8,10,12,14,16],[9,11,13,15,17],[10,12,14,16,18],[11,13,15,17,19],[12,14,16,18,20]]})json"},
    {4, 2,
     R"json({"version":1,"k":40,"antidotes":[[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28],[2,4,6,8,20,22,24,26,28]]})json",
     R"json({"version":1,"k":40,"length":12,"symbols":[[1,3,5,7,9,21,23,25,27,29],[2,4,6,8,10,22,24,26,28,30],[3,5,7,9,11,23,25,27,29,31],[4,6,8,10,12,24,26,28,30,32],[5,7,9,11,13,25,27,29,31,33],[6,8,10,12,14,26,28,30,32,34],[7,9,11,13,15,27,29,31,33,35],[8,10,12,14,16,28,30,32,34,36],[9,11,13,15,17,29,31,33,35,37],[10,12,14,16,18,30,32,34,36,38],[11,13,15,17,19,31,33,35,37,39],[12,14,16,18,20,32,34,36,38,40]]})json"},
    {5, 1,
     R"json({"version":1,"k":21,"antidotes":[[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[4],[1,2,3,4],[1,2,3,4],[1,2,3,4],[1,2,3,4],[1,2,3,4]]})json",
     R"json({"version":1,"k":21,"length":17,"symbols":[[1,5],[2,6],[3,7],[4,8],[5,9],[6,10],[7,11],[8,12],[9,13],[10,14],[11,15],[12,16],[13,17],[14,18],[15,19],[16,20],[17,18,19,20,21]]})json"},
    {5, 2,
     R"json({"version":1,"k":42,"antidotes":[[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[4,21,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25],[1,2,3,4,21,22,23,24,25]]})json",
     R"json({"version":1,"k":42,"length":17,"symbols":[[1,5,22,26],[2,6,23,27],[3,7,24,28],[4,8,25,29],[5,9,26,30],[6,10,27,31],[7,11,28,32],[8,12,29,33],[9,13,30,34],[10,14,31,35],[11,15,32,36],[12,16,33,37],[13,17,34,38],[14,18,35,39],[15,19,36,40],[16,20,37,41],[17,18,19,20,21,38,39,40,41,42]]})json"},
    {5, 3,
     R"json({"version":1,"k":63,"antidotes":[[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[4,21,25,42,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46],[1,2,3,4,21,22,23,24,25,42,43,44,45,46]]})json",
     R"json({"version":1,"k":63,"length":17,"symbols":[[1,5,22,26,43,47],[2,6,23,27,44,48],[3,7,24,28,45,49],[4,8,25,29,46,50],[5,9,26,30,47,51],[6,10,27,31,48,52],[7,11,28,32,49,53],[8,12,29,33,50,54],[9,13,30,34,51,55],[10,14,31,35,52,56],[11,15,32,36,53,57],[12,16,33,37,54,58],[13,17,34,38,55,59],[14,18,35,39,56,60],[15,19,36,40,57,61],[16,20,37,41,58,62],[17,18,19,20,21,38,39,40,41,42,59,60,61,62,63]]})json"},
    {6, 1,
     R"json({"version":1,"k":18,"antidotes":[[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5]]})json",
     R"json({"version":1,"k":18,"length":13,"symbols":[[1,2,3,4,5,6],[2,3,4,5,6,7],[3,4,5,6,7,8],[4,5,6,7,8,9],[5,6,7,8,9,10],[6,7,8,9,10,11],[7,8,9,10,11,12],[8,9,10,11,12,13],[9,10,11,12,13,14],[10,11,12,13,14,15],[11,12,13,14,15,16],[12,13,14,15,16,17],[13,14,15,16,17,18]]})json"},
    {6, 2,
     R"json({"version":1,"k":36,"antidotes":[[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23],[1,2,3,4,5,18,19,20,21,22,23]]})json",
     R"json({"version":1,"k":36,"length":13,"symbols":[[1,2,3,4,5,6,19,20,21,22,23,24],[2,3,4,5,6,7,20,21,22,23,24,25],[3,4,5,6,7,8,21,22,23,24,25,26],[4,5,6,7,8,9,22,23,24,25,26,27],[5,6,7,8,9,10,23,24,25,26,27,28],[6,7,8,9,10,11,24,25,26,27,28,29],[7,8,9,10,11,12,25,26,27,28,29,30],[8,9,10,11,12,13,26,27,28,29,30,31],[9,10,11,12,13,14,27,28,29,30,31,32],[10,11,12,13,14,15,28,29,30,31,32,33],[11,12,13,14,15,16,29,30,31,32,33,34],[12,13,14,15,16,17,30,31,32,33,34,35],[13,14,15,16,17,18,31,32,33,34,35,36]]})json"},
    {7, 1,
     R"json({"version":1,"k":19,"antidotes":[[5],[5],[5],[5],[5],[5],[5],[5],[5],[5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5]]})json",
     R"json({"version":1,"k":19,"length":14,"symbols":[[1,6],[6,11],[11,15,19],[2,7],[7,12],[12,16,19],[3,8],[8,13],[13,17,19],[4,9],[9,14],[14,18,19],[5,10],[10,15]]})json"},
    {7, 2,
     R"json({"version":1,"k":38,"antidotes":[[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[5,19,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24],[1,2,3,4,5,19,20,21,22,23,24]]})json",
     R"json({"version":1,"k":38,"length":14,"symbols":[[1,6,20,25],[2,7,21,26],[3,8,22,27],[4,9,23,28],[5,10,24,29],[6,11,25,30],[7,12,26,31],[8,13,27,32],[9,14,28,33],[10,15,29,34],[11,15,19,30,34,38],[12,16,19,31,35,38],[13,17,19,32,36,38],[14,18,19,33,37,38]]})json"},
    {7, 3,
     R"json({"version":1,"k":57,"antidotes":[[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[5,19,24,38,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43],[1,2,3,4,5,19,20,21,22,23,24,38,39,40,41,42,43]]})json",
     R"json({"version":1,"k":57,"length":14,"symbols":[[1,6,20,25,39,44],[2,7,21,26,40,45],[3,8,22,27,41,46],[4,9,23,28,42,47],[5,10,24,29,43,48],[6,11,25,30,44,49],[7,12,26,31,45,50],[8,13,27,32,46,51],[9,14,28,33,47,52],[10,15,29,34,48,53],[11,15,19,30,34,38,49,53,57],[12,16,19,31,35,38,50,54,57],[13,17,19,32,36,38,51,55,57],[14,18,19,33,37,38,52,56,57]]})json"},
};

} // namespace

std::span<const DemoFixture> demo_fixtures() { return kFixtures; }

ClassDescriptor example_descriptor(int example) {
    switch (example) {
    case 1: return ClassDescriptor::make(Family::case1, 20, 4);
    case 2: return ClassDescriptor::make(Family::case6, 21, 17, 1);
    case 3: return ClassDescriptor::make(Family::case10, 28, 18, 2);
    case 4: return ClassDescriptor::make(Family::class_i, 20, 8);
    case 5: return ClassDescriptor::make(Family::class_ii, 21, 4, 1);
    case 6: return ClassDescriptor::make(Family::class_iii, 18, 5, 1);
    case 7: return ClassDescriptor::make(Family::class_iv, 19, 5, 1);
    default: throw std::invalid_argument("example must be in [1, 7], got " + std::to_string(example));
    }
}

std::vector<int> supported_multiplicities(int example) {
    std::vector<int> out;
    for (const auto& f : kFixtures) {
        if (f.example == example) out.push_back(f.m);
    }
    return out;
}

DemoReport demo(int example, int m) {
    const auto it = std::ranges::find_if(kFixtures, [&](const DemoFixture& f) { return f.example == example && f.m == m; });
    if (it == std::end(kFixtures)) {
        throw std::invalid_argument("no fixture for example " + std::to_string(example) + " with m=" + std::to_string(m));
    }
    const IndexCodingProblem expected_problem = parse_problem(it->problem_json);
    const LinearIndexCode expected_code = parse_code(it->code_json);

    const auto built = construct(example_descriptor(example).with_m(m));

    DemoReport report;
    report.example = example;
    report.m = m;
    report.problem_match = built.problem == expected_problem;
    report.code_match = built.code == expected_code;
    report.expected_length = expected_code.length();
    report.actual_length = built.code.length();

    const auto want = expected_code.sorted_symbols();
    const auto got = built.code.sorted_symbols();
    std::ranges::set_difference(want, got, std::back_inserter(report.missing));
    std::ranges::set_difference(got, want, std::back_inserter(report.unexpected));

    report.decodable = verify(built.problem, built.code).overall;
    report.certificate = optimality_certificate(built.problem, built.code);
    return report;
}

} // namespace icl
