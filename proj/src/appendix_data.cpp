// Generated by tools/gen_appendix.py; do not edit.
#include "appendix_data.hpp"

namespace germlab::detail {

const char* const appendix_coefficients[9] = {
    "-2600*c^3*d^5-375*c^4*d^4+8110*c^2*d^6-9*c*d^7+9*a*d^7-3150*a*c^4*d^3-32970*a*c^3*d^4+3656"
    "*a*c*d^6-8873*a*c^2*d^5-378*d^8-175530*a^2*c^2*d^4+8873*a^2*c*d^5-8640*a^2*c^4*d^2-95877*a"
    "^2*c^3*d^3+8110*a^2*d^6+297*a^3*b^2*d^3-52596*a^3*c^3*d^2-32970*a^3*c*d^4-8991*a^3*c^4*d+9"
    "5877*a^3*c^2*d^3+2600*a^3*d^5+1750*b^2*c*d^5+2429*b*c*d^6+2601*b^2*c^2*d^4+9887*b*c^2*d^5-"
    "27*b^3*c^3*d^2-297*b^2*c^3*d^3-8070*b*c^3*d^4-540*b^2*c^4*d^2+243*a*b^3*c^4-81*b^3*c^4*d+7"
    "29*a^2*b^3*c^3+729*a^3*b^3*c^2-27*a^3*b^3*d^2-8991*a^2*b^2*c^4+42768*a^3*b^2*c^3+2601*a^2*"
    "b^2*d^4-1750*a*b^2*d^5+17739*a^3*b*c^4+1350*b*c^4*d^3-9887*a^2*b*d^5+2429*a*b*d^6-81*a*b^3"
    "*c^2*d^2+162*a^3*b^3*c*d-81*a^2*b^3*c*d^2-5103*a*b^2*c^4*d-25353*a^2*b^2*c^3*d-8370*a*b^2*"
    "c^3*d^2+18090*a^2*b^2*c^2*d^2-8370*a^3*b^2*c*d^2+22797*a^2*b^2*c*d^3-13548*a*b^2*c*d^4+264"
    "87*a^2*b*c^4*d+11070*a*b*c^4*d^2+41661*a^2*b*c^3*d^2-375*a^4*d^4-3402*a^4*c^4+250*b^2*d^6-"
    "13374*a*b*c^3*d^3+41661*a^3*b*c^2*d^2-73629*a*b*c^2*d^4-73629*a^2*b*c*d^4+8991*a^4*c^3*d-8"
    "640*a^4*c^2*d^2+3150*a^4*c*d^3+13374*a^3*b*c*d^3-162*a*b^3*c^3*d+25353*a^3*b^2*c^2*d-22797"
    "*a*b^2*c^2*d^3+243*a^4*b^3*c+81*a^4*b^3*d-8991*a^4*b^2*c^2+5103*a^4*b^2*c*d-540*a^4*b^2*d^"
    "2+17739*a^4*b*c^3-26487*a^4*b*c^2*d+11070*a^4*b*c*d^2-1350*a^4*b*d^3-8070*a^3*b*d^4",
    "8600*c^3*d^5+3000*c^4*d^4-36160*c^2*d^6-648*c*d^7-720*a*d^7+23400*a*c^4*d^3+151920*a*c^3*d"
    "^4-14624*a*c*d^6+57944*a*c^2*d^5+1512*d^8+702120*a^2*c^2*d^4-13040*a^2*c*d^5+57240*a^2*c^4"
    "*d^2+435456*a^2*c^3*d^3-28720*a^2*d^6+1080*a^3*b^2*d^3+210384*a^3*c^3*d^2+111840*a^3*c*d^4"
    "+49248*a^3*c^4*d-331560*a^3*c^2*d^3-12200*a^3*d^5-14320*b^2*c*d^5-11096*b*c*d^6+360*b^3*c^"
    "2*d^3-45144*b^2*c^2*d^4-125456*b*c^2*d^5+1728*b^3*c^3*d^2+3456*b^2*c^3*d^3+86520*b*c^3*d^4"
    "+8640*b^2*c^4*d^2-5832*a*c^4*b^3+648*b^3*c^4*d-7776*a^2*b^3*c^3+1944*a^3*b^3*c^2-1512*a^3*"
    "b^3*d^2+360*a^2*b^3*d^3+99144*a^2*b^2*c^4-171072*a^3*b^2*c^3+24336*a^2*b^2*d^4-320*a*b^2*d"
    "^5-124416*a^3*b*c^4-12600*b*c^4*d^3-46360*a^2*b*d^5-8336*a*b*d^6-17496*a^2*b^3*c^2*d+1944*"
    "a*b^3*c^2*d^2-9072*a^3*b^3*c*d-1296*a^2*b^3*c*d^2+720*a*b^3*c*d^3+66744*a*b^2*c^4*d+269568"
    "*a^2*b^2*c^3*d+172800*a*b^2*c^3*d^2-72360*a^2*b^2*c^2*d^2-105840*a^3*b^2*c*d^2+140976*a^2*"
    "b^2*c*d^3+54192*a*b^2*c*d^4-208656*a^2*b*c^4*d-96120*a*b*c^4*d^2+724464*a^3*b*c^3*d+521856"
    "*a^2*b*c^3*d^2+13608*a^4*c^4-1000*b^2*d^6+3960*b*d^7+320112*a*b*c^3*d^3-855144*a^3*b*c^2*d"
    "^2+1651032*a^2*b*c^2*d^3+419256*a*b*c^2*d^4+169776*a^2*b*c*d^4-22680*a^4*c^3*d+11880*a^4*c"
    "^2*d^2-1800*a^4*c*d^3+213120*a^3*b*c*d^3-25056*a*b*c*d^5-7776*a*b^3*c^3*d+66744*a^3*b^2*c^"
    "2*d+323352*a*b^2*c^2*d^3+3888*a^4*b^3*c-27216*a^4*b^2*c^2+25920*a^4*b^2*c*d-4320*a^4*b^2*d"
    "^2-17496*a^4*b*c^3+3240*a^4*b*c^2*d+7560*a^4*b*c*d^2-1800*a^4*b*d^3-21960*a^3*b*d^4",
    "-11900*c^3*d^5-10500*c^4*d^4+85960*c^2*d^6+252*c*d^7+4536*a*d^7-75600*a*c^4*d^3-367920*a*c"
    "^3*d^4+36512*a*c*d^6-194936*a*c^2*d^5-3780*d^8-1282596*a^2*c^2*d^4+37772*a^2*c*d^5-162540*"
    "a^2*c^4*d^2-936684*a^2*c^3*d^3+59920*a^2*d^6-61992*a^3*b^2*d^3-343224*a^3*c^3*d^2-227640*a"
    "^3*c*d^4-111132*a^3*c^4*d+573048*a^3*c^2*d^3+24500*a^3*d^5-2100*b^3*c*d^4+66220*b^2*c*d^5+"
    "32060*b*c*d^6-13860*b^3*c^2*d^3+120120*b^2*c^2*d^4+406364*b*c^2*d^5-18900*b^3*c^3*d^2+4611"
    "6*b^2*c^3*d^3-302820*b*c^3*d^4-49140*b^2*c^4*d^2+47628*a*b^3*c^4+2268*b^3*c^4*d-61236*a^2*"
    "b^3*c^3-95256*a^3*b^3*c^2-7560*a^3*b^3*d^2+11340*a^2*b^3*d^3-2100*a*b^3*d^4-435456*a^2*b^2"
    "*c^4-598752*a^3*b^2*c^3-123060*a^2*b^2*d^4-14980*a*b^2*d^5+347004*a^3*b*c^4+50400*b*c^4*d^"
    "3+194992*a^2*b*d^5+22400*a*b*d^6+61236*a^2*b^3*c^2*d+68040*a*b^3*c^2*d^2-90720*a^3*b^3*c*d"
    "+79380*a^2*b^3*c*d^2-2520*a*b^3*c*d^3-333396*a*b^2*c^4*d-1780380*a^2*b^2*c^3*d-1068984*a*b"
    "^2*c^3*d^2-3283308*a^2*b^2*c^2*d^2-93744*a^3*b^2*c*d^2-1118628*a^2*b^2*c*d^3-160440*a*b^2*"
    "c*d^4+687204*a^2*b*c^4*d+355320*a*b*c^4*d^2-2535624*a^3*b*c^3*d-2035908*a^2*b*c^3*d^2-2041"
    "2*a^4*c^4+9100*b^2*d^6-13860*b*d^7-928368*a*b*c^3*d^3+2783592*a^3*b*c^2*d^2-5778612*a^2*b*"
    "c^2*d^3-1237656*a*b*c^2*d^4-364476*a^2*b*c*d^4+18144*a^4*c^3*d-3780*a^4*c^2*d^2-937944*a^3"
    "*b*c*d^3+87696*a*b*c*d^5+149688*a*b^3*c^3*d+603288*a^3*b^2*c^2*d-506520*a*b^2*c^2*d^3+1360"
    "8*a^4*b^3*c-4536*a^4*b^3*d+6804*a^4*b^2*c^2+9072*a^4*b^2*c*d-3780*a^4*b^2*d^2-27216*a^4*b*"
    "c^3+31752*a^4*b*c^2*d-7560*a^4*b*c*d^2+76860*a^3*b*d^4",
    "8400*c^3*d^5+21000*c^4*d^4-140560*c^2*d^6-504*c*d^7-13104*a*d^7+138600*a*c^4*d^3+611520*a*"
    "c^3*d^4-58352*a*c*d^6+448952*a*c^2*d^5+6048*d^8+1390368*a^2*c^2*d^4-728*a^2*c*d^5+257040*a"
    "^2*c^4*d^2+1198008*a^2*c^3*d^3-70000*a^2*d^6-16632*a^3*b^2*d^3+293328*a^3*c^3*d^2+252000*a"
    "^3*c*d^4+131544*a^3*c^4*d-646632*a^3*c^2*d^3-28000*a^3*d^5+58800*b^3*c*d^4-81760*b^2*c*d^5"
    "-56504*b*c*d^6+136080*b^3*c^2*d^3+79464*b^2*c^2*d^4-666008*b*c^2*d^5+61992*b^3*c^3*d^2-349"
    "272*b^2*c^3*d^3+577920*b*c^3*d^4+143640*b^2*c^4*d^2-190512*a*b^3*c^4-27216*b^3*c^4*d+99338"
    "4*a^2*b^3*c^3-503496*a^3*b^3*c^2+16632*a^3*b^3*d^2+60480*a^2*b^3*d^3-46200*a*b^3*d^4+99338"
    "4*a^2*b^2*c^4+2395008*a^3*b^2*c^3+2184*a^2*b^2*d^4+112840*a*b^2*d^5-503496*a^3*b*c^4-11340"
    "0*b*c^4*d^3-308728*a^2*b*d^5-38864*a*b*d^6+1832544*a^2*b^3*c^2*d-1144584*a*b^3*c^2*d^2-154"
    "224*a^3*b^3*c*d+700056*a^2*b^3*c*d^2-433440*a*b^3*c*d^3+870912*a*b^2*c^4*d+2862216*a^2*b^2"
    "*c^3*d+2549232*a*b^2*c^3*d^2+10103184*a^2*b^2*c^2*d^2+704592*a^3*b^2*c*d^2+897624*a^2*b^2*"
    "c*d^3+291648*a*b^2*c*d^4-1238328*a^2*b*c^4*d-733320*a*b*c^4*d^2+3510864*a^3*b*c^3*d+323416"
    "8*a^2*b*c^3*d^2+13608*a^4*c^4+7000*b^3*d^5-23800*b^2*d^6+22680*b*d^7+949536*a*b*c^3*d^3-43"
    "10712*a^3*b*c^2*d^2+8083152*a^2*b*c^2*d^3+2276232*a*b*c^2*d^4+468552*a^2*b*c*d^4-4536*a^4*"
    "c^3*d+1352736*a^3*b*c*d^3-87696*a*b*c*d^5-879984*a*b^3*c^3*d-3578904*a^3*b^2*c^2*d-1577016"
    "*a*b^2*c^2*d^3+13608*a^4*b^3*c-4536*a^4*b^3*d+40824*a^4*b^2*c^2-13608*a^4*b^2*c*d+40824*a^"
    "4*b*c^3-13608*a^4*b*c^2*d-126000*a^3*b*d^4",
    "-26250*c^4*d^4+165550*c^2*d^6+22050*a*d^7-157500*a*c^4*d^3-716100*a*c^3*d^4+68348*a*c*d^6-"
    "676550*a*c^2*d^5-7182*d^8-788802*a^2*c^2*d^4-51100*a^2*c*d^5-245700*a^2*c^4*d^2-900900*a^2"
    "*c^3*d^3+54250*a^2*d^6+53550*a^3*b^2*d^3-152712*a^3*c^3*d^2-168000*a^3*c*d^4-85050*a^3*c^4"
    "*d+431550*a^3*c^2*d^3+17500*a^3*d^5-168000*b^3*c*d^4+51100*b^2*c*d^5+68348*b*c*d^6-431550*"
    "b^3*c^2*d^3-788802*b^2*c^2*d^4+676550*b*c^2*d^5-152712*b^3*c^3*d^2+900900*b^2*c^3*d^3-7161"
    "00*b*c^3*d^4-245700*b^2*c^4*d^2-13608*a^3*b^4*c+411642*a*b^3*c^4+85050*b^3*c^4*d-2592324*a"
    "^2*b^3*c^3+1234926*a^3*b^3*c^2-67662*a^3*b^3*d^2-53550*a^2*b^3*d^3+94500*a*b^3*d^4-1296162"
    "*a^2*b^2*c^4-2592324*a^3*b^2*c^3+12348*a^2*b^2*d^4-256900*a*b^2*d^5+411642*a^3*b*c^4+15750"
    "0*b*c^4*d^3+256900*a^2*b*d^5+48398*a*b*d^6-4734450*a^2*b^3*c^2*d+3406914*a*b^3*c^2*d^2-123"
    "3036*a^2*b^3*c*d^2+1089900*a*b^3*c*d^3-1332450*a*b^2*c^4*d-3406536*a*b^2*c^3*d^2-13513122*"
    "a^2*b^2*c^2*d^2-1233036*a^3*b^2*c*d^2-445704*a*b^2*c*d^4+1332450*a^2*b*c^4*d+926100*a*b*c^"
    "4*d^2-2438100*a^3*b*c^3*d-3406536*a^2*b*c^3*d^2-3402*a^4*c^4-17500*b^3*d^5+54250*b^2*d^6-2"
    "2050*b*d^7-3402*c^4*b^4-13608*a*b^4*c^3-20412*a^2*b^4*c^2+3406914*a^3*b*c^2*d^2-5761350*a^"
    "2*b*c^2*d^3-2781954*a*b*c^2*d^4-445704*a^2*b*c*d^4-1089900*a^3*b*c*d^3+2438100*a*b^3*c^3*d"
    "+4734450*a^3*b^2*c^2*d+5761350*a*b^2*c^2*d^3-3402*a^4*b^4-13608*a^4*b^3*c-20412*a^4*b^2*c^"
    "2-13608*a^4*b*c^3+94500*a^3*b*d^4",
    "-8400*c^3*d^5+21000*c^4*d^4-140560*c^2*d^6+504*c*d^7-22680*a*d^7+113400*a*c^4*d^3+577920*a"
    "*c^3*d^4-56504*a*c*d^6+666008*a*c^2*d^5+6048*d^8+79464*a^2*c^2*d^4+81760*a^2*c*d^5+143640*"
    "a^2*c^4*d^2+349272*a^2*c^3*d^3-23800*a^2*d^6-60480*a^3*b^2*d^3+61992*a^3*c^3*d^2+58800*a^3"
    "*c*d^4+27216*a^3*c^4*d-136080*a^3*c^2*d^3-7000*a^3*d^5+252000*b^3*c*d^4+728*b^2*c*d^5-5835"
    "2*b*c*d^6+646632*b^3*c^2*d^3+1390368*b^2*c^2*d^4-448952*b*c^2*d^5+293328*b^3*c^3*d^2-11980"
    "08*b^2*c^3*d^3+611520*b*c^3*d^4+257040*b^2*c^4*d^2+13608*a^3*b^4*c+4536*a^3*b^4*d-503496*a"
    "*b^3*c^4-131544*b^3*c^4*d+2395008*a^2*b^3*c^3-503496*a^3*b^3*c^2+16632*a^3*b^3*d^2+16632*a"
    "^2*b^3*d^3-126000*a*b^3*d^4+993384*a^2*b^2*c^4+993384*a^3*b^2*c^3+2184*a^2*b^2*d^4+308728*"
    "a*b^2*d^5-190512*a^3*b*c^4-138600*b*c^4*d^3-112840*a^2*b*d^5-38864*a*b*d^6+13608*a*b^4*c^2"
    "*d+13608*a^2*b^4*c*d+3578904*a^2*b^3*c^2*d-4310712*a*b^3*c^2*d^2+154224*a^3*b^3*c*d+704592"
    "*a^2*b^3*c*d^2-1352736*a*b^3*c*d^3+1238328*a*b^2*c^4*d-2862216*a^2*b^2*c^3*d+3234168*a*b^2"
    "*c^3*d^2+10103184*a^2*b^2*c^2*d^2+700056*a^3*b^2*c*d^2-897624*a^2*b^2*c*d^3+468552*a*b^2*c"
    "*d^4-870912*a^2*b*c^4*d-733320*a*b*c^4*d^2+879984*a^3*b*c^3*d+2549232*a^2*b*c^3*d^2+28000*"
    "b^3*d^5-70000*b^2*d^6+13104*b*d^7+13608*b^4*c^4+40824*a*b^4*c^3+4536*b^4*c^3*d+40824*a^2*b"
    "^4*c^2-949536*a*b*c^3*d^3-1144584*a^3*b*c^2*d^2+1577016*a^2*b*c^2*d^3+2276232*a*b*c^2*d^4+"
    "291648*a^2*b*c*d^4+433440*a^3*b*c*d^3+87696*a*b*c*d^5-3510864*a*b^3*c^3*d-1832544*a^3*b^2*"
    "c^2*d-8083152*a*b^2*c^2*d^3-46200*a^3*b*d^4",
    "-3780*b^4*c^2*d^2+11900*c^3*d^5-10500*c^4*d^4+85960*c^2*d^6-252*c*d^7+13860*a*d^7-50400*a*"
    "c^4*d^3-302820*a*c^3*d^4+32060*a*c*d^6-406364*a*c^2*d^5-3780*d^8+120120*a^2*c^2*d^4-66220*"
    "a^2*c*d^5-49140*a^2*c^4*d^2-46116*a^2*c^3*d^3+9100*a^2*d^6-11340*a^3*b^2*d^3-18900*a^3*c^3"
    "*d^2-2100*a^3*c*d^4-2268*a^3*c^4*d+13860*a^3*c^2*d^3-227640*b^3*c*d^4-37772*b^2*c*d^5+3651"
    "2*b*c*d^6-573048*b^3*c^2*d^3-1282596*b^2*c^2*d^4+194936*b*c^2*d^5-343224*b^3*c^3*d^2+93668"
    "4*b^2*c^3*d^3-367920*b*c^3*d^4-162540*b^2*c^4*d^2+13608*a^3*b^4*c+4536*a^3*b^4*d-3780*a^2*"
    "b^4*d^2+347004*a*b^3*c^4+111132*b^3*c^4*d-598752*a^2*b^3*c^3-95256*a^3*b^3*c^2-7560*a^3*b^"
    "3*d^2+61992*a^2*b^3*d^3+76860*a*b^3*d^4-435456*a^2*b^2*c^4-61236*a^3*b^2*c^3-123060*a^2*b^"
    "2*d^4-194992*a*b^2*d^5+47628*a^3*b*c^4+75600*b*c^4*d^3+14980*a^2*b*d^5+22400*a*b*d^6-31752"
    "*a*b^4*c^2*d-9072*a^2*b^4*c*d-7560*a*b^4*c*d^2-603288*a^2*b^3*c^2*d+2783592*a*b^3*c^2*d^2+"
    "90720*a^3*b^3*c*d-93744*a^2*b^3*c*d^2+937944*a*b^3*c*d^3-687204*a*b^2*c^4*d+1780380*a^2*b^"
    "2*c^3*d-2035908*a*b^2*c^3*d^2-3283308*a^2*b^2*c^2*d^2+79380*a^3*b^2*c*d^2+1118628*a^2*b^2*"
    "c*d^3-364476*a*b^2*c*d^4+333396*a^2*b*c^4*d+355320*a*b*c^4*d^2-149688*a^3*b*c^3*d-1068984*"
    "a^2*b*c^3*d^2-24500*b^3*d^5+59920*b^2*d^6-4536*a*d^7-20412*b^4*c^4-27216*a*b^4*c^3-18144*b"
    "^4*c^3*d+6804*a^2*b^4*c^2+928368*a*b*c^3*d^3+68040*a^3*b*c^2*d^2+506520*a^2*b*c^2*d^3-1237"
    "656*a*b*c^2*d^4-160440*a^2*b*c*d^4+2520*a^3*b*c*d^3-87696*a*b*c*d^5+2535624*a*b^3*c^3*d-61"
    "236*a^3*b^2*c^2*d+5778612*a*b^2*c^2*d^3-2100*a^3*b*d^4",
    "11880*b^4*c^2*d^2+1800*b^4*c*d^3-8600*c^3*d^5+3000*c^4*d^4-36160*c^2*d^6+648*c*d^7-3960*a*"
    "d^7+12600*a*c^4*d^3+86520*a*c^3*d^4-11096*a*c*d^6+125456*a*c^2*d^5+1512*d^8-45144*a^2*c^2*"
    "d^4+14320*a^2*c*d^5+8640*a^2*c^4*d^2-3456*a^2*c^3*d^3-1000*a^2*d^6-360*a^3*b^2*d^3+1728*a^"
    "3*c^3*d^2-648*a^3*c^4*d-360*a^3*c^2*d^3+111840*b^3*c*d^4+13040*b^2*c*d^5-14624*b*c*d^6+331"
    "560*b^3*c^2*d^3+702120*b^2*c^2*d^4-57944*b*c^2*d^5+210384*b^3*c^3*d^2-435456*b^2*c^3*d^3+1"
    "51920*b*c^3*d^4+57240*b^2*c^4*d^2+3888*a^3*b^4*c-4320*a^2*b^4*d^2+1800*a*b^4*d^3-124416*a*"
    "b^3*c^4-49248*b^3*c^4*d-171072*a^2*b^3*c^3+1944*a^3*b^3*c^2-1512*a^3*b^3*d^2-1080*a^2*b^3*"
    "d^3-21960*a*b^3*d^4+99144*a^2*b^2*c^4-7776*a^3*b^2*c^3+24336*a^2*b^2*d^4+46360*a*b^2*d^5-5"
    "832*a^3*b*c^4-23400*b*c^4*d^3+320*a^2*b*d^5-8336*a*b*d^6-3240*a*b^4*c^2*d-25920*a^2*b^4*c*"
    "d+7560*a*b^4*c*d^2-66744*a^2*b^3*c^2*d-855144*a*b^3*c^2*d^2+9072*a^3*b^3*c*d-105840*a^2*b^"
    "3*c*d^2-213120*a*b^3*c*d^3+208656*a*b^2*c^4*d-269568*a^2*b^2*c^3*d+521856*a*b^2*c^3*d^2-72"
    "360*a^2*b^2*c^2*d^2-1296*a^3*b^2*c*d^2-140976*a^2*b^2*c*d^3+169776*a*b^2*c*d^4-66744*a^2*b"
    "*c^4*d-96120*a*b*c^4*d^2+7776*a^3*b*c^3*d+172800*a^2*b*c^3*d^2+12200*b^3*d^5-28720*b^2*d^6"
    "+720*b*d^7+13608*b^4*c^4-17496*a*b^4*c^3+22680*b^4*c^3*d-27216*a^2*b^4*c^2-320112*a*b*c^3*"
    "d^3+1944*a^3*b*c^2*d^2-323352*a^2*b*c^2*d^3+419256*a*b*c^2*d^4+54192*a^2*b*c*d^4-720*a^3*b"
    "*c*d^3+25056*a*b*c*d^5-724464*a*b^3*c^3*d+17496*a^3*b^2*c^2*d-1651032*a*b^2*c^2*d^3",
    "-375*b^4*d^4-8640*b^4*c^2*d^2-3150*b^4*c*d^3+2600*c^3*d^5-375*c^4*d^4+8110*c^2*d^6+9*c*d^7"
    "-1350*a*c^4*d^3-8070*a*c^3*d^4+2429*a*c*d^6-9887*a*c^2*d^5-378*d^8+2601*a^2*c^2*d^4-1750*a"
    "^2*c*d^5-540*a^2*c^4*d^2+297*a^2*c^3*d^3+250*a^2*d^6-27*a^3*c^3*d^2+81*a^3*c^4*d-32970*b^3"
    "*c*d^4-8873*b^2*c*d^5+3656*b*c*d^6-95877*b^3*c^2*d^3-175530*b^2*c^2*d^4+8873*b*c^2*d^5-525"
    "96*b^3*c^3*d^2+95877*b^2*c^3*d^3-32970*b*c^3*d^4-8640*b^2*c^4*d^2+243*a^3*b^4*c-81*a^3*b^4"
    "*d-540*a^2*b^4*d^2+1350*a*b^4*d^3+17739*a*b^3*c^4+8991*b^3*c^4*d+42768*a^2*b^3*c^3+729*a^3"
    "*b^3*c^2-27*a^3*b^3*d^2-297*a^2*b^3*d^3-8070*a*b^3*d^4-8991*a^2*b^2*c^4+729*a^3*b^2*c^3+26"
    "01*a^2*b^2*d^4+9887*a*b^2*d^5+243*a^3*b*c^4+3150*b*c^4*d^3+1750*a^2*b*d^5+2429*a*b*d^6+264"
    "87*a*b^4*c^2*d-5103*a^2*b^4*c*d+11070*a*b^4*c*d^2-25353*a^2*b^3*c^2*d+41661*a*b^3*c^2*d^2-"
    "162*a^3*b^3*c*d-8370*a^2*b^3*c*d^2-13374*a*b^3*c*d^3-26487*a*b^2*c^4*d+25353*a^2*b^2*c^3*d"
    "+41661*a*b^2*c^3*d^2+18090*a^2*b^2*c^2*d^2-81*a^3*b^2*c*d^2-22797*a^2*b^2*c*d^3-73629*a*b^"
    "2*c*d^4+5103*a^2*b*c^4*d+11070*a*b*c^4*d^2+162*a^3*b*c^3*d-8370*a^2*b*c^3*d^2-2600*b^3*d^5"
    "+8110*b^2*d^6-9*b*d^7-3402*b^4*c^4+17739*a*b^4*c^3-8991*b^4*c^3*d-8991*a^2*b^4*c^2+13374*a"
    "*b*c^3*d^3-81*a^3*b*c^2*d^2+22797*a^2*b*c^2*d^3-73629*a*b*c^2*d^4-13548*a^2*b*c*d^4",
};

}  // namespace germlab::detail
