#include "qfs/catalogue.hpp"

namespace qfs {

const std::vector<KnownEquation>& quartics_f2() {
    static const std::vector<KnownEquation> rows = {
        {"x^4+x^2y^2+xy^3+yw^3+z^3w", 2, {1, 1, 1, 1}, 3},
        {"x^4+xy^3+z^3w+yzw^2+zw^3", 2, {1, 1, 1, 1}, 4},
        {"x^4+xy^3+z^3w+y^2w^2+yw^3", 2, {1, 1, 1, 1}, 5},
        {"x^4+x^2y^2+xy^3+yz^2w+z^3w+zw^3", 2, {1, 1, 1, 1}, 6},
        {"x^4+x^3y+xz^3+y^3w+w^4", 2, {1, 1, 1, 1}, 7},
        {"x^4+xy^3+x^2yw+z^3w+yzw^2+xw^3", 2, {1, 1, 1, 1}, 8},
        {"x^4+xy^3+yw^3+z^3w", 2, {1, 1, 1, 1}, 9},
    };
    return rows;
}

const std::vector<KnownEquation>& quartics_f3() {
    static const std::vector<KnownEquation> rows = {
        {"x^4+y^4+z^4+w^4", 3, {1, 1, 1, 1}, 1},
        {"x^4+y^3z+yz^3+xy^2w+w^4", 3, {1, 1, 1, 1}, 2},
        {"x^4+x^2y^2+y^3z+yz^3+w^4", 3, {1, 1, 1, 1}, 3},
        {"x^3y+xy^3+x^2yz+z^3w+zw^3", 3, {1, 1, 1, 1}, 4},
        {"x^3y+x^2yz+y^3z+z^3w+xw^3", 3, {1, 1, 1, 1}, 5},
        {"x^4+x^3y+x^2yz+y^3z+z^3w+xw^3", 3, {1, 1, 1, 1}, 6},
        {"-x^4+x^3y+y^4-x^2yz+y^3z+x^2zw+z^3w+xw^3", 3, {1, 1, 1, 1}, 7},
        {"x^4+x^3y+x^3z+x^2yz-y^3z+y^2z^2+z^3w+xyw^2+xw^3", 3, {1, 1, 1, 1}, 8},
        {"-x^4+x^3y+x^3z+x^2yz+y^3z+y^3w-z^3w+xw^3", 3, {1, 1, 1, 1}, 9},
        {"x^4+x^3y+xy^3+x^2yz+y^3z+x^3w+y^2zw+z^3w+xyw^2+xw^3", 3, {1, 1, 1, 1}, 10},
    };
    return rows;
}

const KnownEquation& quintic_f2() {
    static const KnownEquation q{"x^5+x^4y+x^2y^3+y^5+x^3yz+x^3z^2+z^5+x^2y^2w+x^3w^2+xy^2w^2+yz^2w^2+w^5+x^4u+xy^3u+"
                                 "xz^2u^2+xw^2u^2+yw^2u^2+u^5",
                                 2,
                                 {1, 1, 1, 1, 1},
                                 58};
    return q;
}

const KnownEquation& quartic_ns2_f2() {
    static const KnownEquation q{"x^4+y^4+z^4+w^4+x^2y^2+x^2z^2+y^2z^2+x^2yz+xy^2z+xyz^2", 2, {1, 1, 1, 1}, 2};
    return q;
}

} // namespace qfs
