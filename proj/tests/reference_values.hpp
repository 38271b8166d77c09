#pragma once

// Published reference values, transcribed verbatim.

#include <utility>

namespace ref {

// R_n(2), n x 2n rectangles.
inline constexpr std::pair<int, const char*> kAspect2[] = {
    {2, "4.6381585303417408684303075667444130488805022010318359737078706077696"},
    {4, "4.5626403997998714832892051885980313566654043362375413463572606810903"},
    {6, "4.5737694425659079263885691980864259391038701844156223313634364418527"},
    {8, "4.5816876116611105157124235041836861179217970948263182063453368731855"},
    {10, "4.586835597801674598789736657813550866717170851432063193366000200424"},
    {12, "4.590372957831729906013721282115051244422423169272971142266883828004"},
    {14, "4.592938409379941423415363287957199443993269739941033366762062737428"},
    {16, "4.594881296788588474819955070086767540896832163815763639405593859180"},
    {18, "4.5964037339238675392443305096632781995673848727512239850106566816295"},
};

// R_n(10), n x 10n rectangles.
inline constexpr std::pair<int, const char*> kAspect10[] = {
    {4, "14006.18549331435655361766127203880086492399593549150863381964074817"},
    {6, "14245.30058306730412888413593536062491411218703615652940541335814143"},
    {8, "14391.29165062927743781254092745976155303961361728983232311816771246"},
    {10, "14487.00740644606426682399787816797507371639547391783093463818418043"},
    {12, "14554.35495421800301499956345001503940598563417509710466751030105068"},
    {14, "14604.3566053623407864953033765640802317538963314516614175885263116878"},
};

// Unnormalised long-side hitting numbers of a 14 x 28 rectangle at c_y = 0..13.
inline constexpr const char* kHitting14x28[] = {
    "0.372179965985066951892060536379", "0.365592202518487166323769503648",
    "0.347584595139263204799699150831", "0.321757459504506388412145573956",
    "0.291774774902074605895271622535", "0.260478252386315460357350977416",
    "0.229709762715325246279406382177", "0.200461104152704918984187699069",
    "0.173099730010024355136783990185", "0.147556785152232511539056308909",
    "0.123439559572782004646612438472", "0.100052601022725874927123950740",
    "0.076292442893068500584108376384", "0.050321628007048540057861695734",
};

}  // namespace ref
