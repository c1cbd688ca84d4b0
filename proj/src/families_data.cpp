// families_data.cpp -- embedded family listing.  Format:
// table,fertility,pattern -- '*' marks an entry that may grow by even
// twists with the family's fertility staying put (the property the test
// suite checks).  Tables 5..11 group families by word length 1..7.
#include "ratlink/families.hpp"

namespace ratlink {

const char* const kFamiliesData = R"(# length 1 and 2 links
5,2,2
5,4,4*
5,5,3* 3*
5,5,2 3* 2
5,5,4* 1 2*
5,6,4* 3* 2*
# length 1 and 2 knots
6,3,3*
6,4,2* 2*
6,4,2 3*
6,5,4* 3*
# length 3 knots
7,4,3* 1 3*
7,5,3* 1 2*
7,5,3* 3* 3*
7,5,3* 2 2*
7,6,3* 3* 2*
# The six families with middle entry 2 split by the middle value: growing
# the middle to 4 or more raises fertility to 6 ([3 2 2] = 7_5 has F 5 but
# [3 4 2] = 9_7 has F 6), so the constant-fertility family here starts at
# middle entry 4.
7,6,3* 4* 2*
# length 4 knots
8,5,2* 1 1 2*
8,6,2* 3* 1 2*
8,6,2* 3* 3* 2*
8,6,2* 2* 1* 2
8,6,2* 2* 1 2*
8,6,2 2* 1* 2*
8,7,4* 2* 3* 4*
8,5,3* 1 1 3*
8,6,3* 3* 1 3*
8,6,3* 3* 3* 3*
8,5,3* 2* 1 2*
8,6,3* 2 3* 2*
8,7,3* 4* 3* 2*
8,6,2* 2* 2* 2*
# Some renderings list the [3 2 1 2] column twice; the second copy is the
# [3 2 1 3] family (= 9_13, the remaining length-4 word of this shape),
# whose rows are encoded here.
8,6,3* 2* 1 3*
8,7,3* 2* 3* 3*
8,6,3* 2 2* 2
8,7,3* 4* 2* 2
8,7,3* 2 2* 4*
8,7,3* 4* 2* 4*
# length 5 knots
9,5,2* 1 1* 1 2*
9,6,2* 3* 1 1* 2*
9,7,2* 3* 3* 1* 2*
9,6,3* 1 1* 1* 2
9,6,3* 1 1* 1 2*
9,7,3* 1 1 3* 4*
9,7,3* 3* 1* 1* 2*
9,6,2 2* 1 1* 2*
9,6,2* 2* 1 1* 2
9,7,4* 2 1* 1* 4*
9,7,2* 2* 3* 1* 2*
9,6,2* 2* 1 2* 2*
9,7,2* 2* 3* 2* 2*
9,6,3* 1* 2* 1 2*
9,6,3* 1 2* 1* 2*
9,7,3* 3* 2* 3* 2*
9,6,3* 1 1* 2* 2*
9,7,3* 3* 1* 2* 2*
9,6,3* 1 2* 2* 2
9,7,3* 1 2* 2* 4*
9,7,3* 3* 2* 2* 2*
9,6,3* 2 2* 1 3*
9,7,3* 4* 2* 1* 3*
9,7,3* 2* 2* 3* 3*
9,6,3* 2* 1 2* 3*
9,7,3* 2* 3* 2* 3*
# length 6 knots
10,6,3* 1 1* 1 1* 2
10,7,3* 3* 1* 1 1* 2
10,7,3* 1 1* 3* 1* 2
10,7,3* 1 1* 1 1* 4*
10,7,3* 3* 1* 3* 1* 4*
10,6,3* 2* 1 1* 1 2*
10,7,3* 2* 3* 1* 1 2*
10,7,3* 2* 1 1* 3* 2*
10,7,3* 2* 3* 1* 3* 4*
10,6,3* 1 2* 1 1* 2*
10,7,3* 3* 2* 1 1* 2*
10,7,3* 1 2* 3* 1* 2*
10,7,3* 3* 2* 3* 1* 2*
10,6,3* 1 3* 1 2* 2*
10,7,3* 3* 3* 1 2* 2*
10,7,3* 1 3* 3* 2* 2*
10,7,3* 3* 3* 3* 2* 2*
10,6,3* 1 1* 1* 1 3*
10,7,3* 3* 1* 1* 1 3*
10,7,3* 3* 1* 1* 3* 3*
10,6,2* 1 2* 2* 1 2*
10,7,2* 3* 2* 2* 1 2*
10,7,2* 3* 2* 2* 3* 2*
10,6,3* 1 2* 1 2* 2
10,7,3* 3* 2* 1 2* 2
10,7,3* 1 2* 3* 2* 2
10,7,3* 1 2* 1 2* 4*
10,7,3* 3* 2* 3* 2* 4*
10,6,3* 1 2* 2* 1 3*
10,7,3* 3* 2* 2* 1 3*
10,7,3* 3* 2* 2* 3* 3*
# length 7 knots
11,6,2* 1 1* 1 1* 1 2*
11,7,2* 1* 1* 3* 1* 1* 2*
11,7,2* 3* 1* 1* 1* 1* 2*
# Some renderings star-and-bump the fourth entry of this family's fertility-6
# row, which would make its base word coincide with the fertility-7 row below
# it; the consistent base (matching the neighbouring columns) is the
# all-minimal word 3 1 1 1 1 1 3.
11,6,3* 1 1* 1 1* 1 3*
11,7,3* 1* 1* 3* 1* 1* 3*
11,7,3* 3* 1* 1* 1* 1* 3*
11,6,3* 1 2* 1 2* 1 3*
11,7,3* 1* 2* 3* 2* 1* 3*
11,7,3* 3* 2* 1* 2* 1* 3*
)";

} // namespace ratlink
