#include "cpcc/geography.hpp"

namespace cpcc::proxies {

// Generated from data/gazetteer/gazetteer.csv; keep the two in sync.
std::string_view builtin_gazetteer_csv() {
    return R"CSV(alias,level,city,country,continent
africa,continent,,,africa
antarctica,continent,,,antarctica
asia,continent,,,asia
europe,continent,,,europe
north america,continent,,,north america
oceania,continent,,,oceania
south america,continent,,,south america
portugal,country,,portugal,europe
algarve,country,,portugal,europe
madeira,country,,portugal,europe
azores,country,,portugal,europe
lisbon,city,lisbon,portugal,europe
lisbon airport,city,lisbon,portugal,europe
lis,city,lisbon,portugal,europe
lisboa,city,lisbon,portugal,europe
porto,city,porto,portugal,europe
porto airport,city,porto,portugal,europe
opo,city,porto,portugal,europe
oporto,city,porto,portugal,europe
faro,city,faro,portugal,europe
faro airport,city,faro,portugal,europe
fao,city,faro,portugal,europe
funchal,city,funchal,portugal,europe
funchal airport,city,funchal,portugal,europe
ponta delgada,city,ponta delgada,portugal,europe
ponta delgada airport,city,ponta delgada,portugal,europe
pdl,city,ponta delgada,portugal,europe
coimbra,city,coimbra,portugal,europe
coimbra airport,city,coimbra,portugal,europe
braga,city,braga,portugal,europe
braga airport,city,braga,portugal,europe
spain,country,,spain,europe
espana,country,,spain,europe
mallorca,country,,spain,europe
majorca,country,,spain,europe
canary islands,country,,spain,europe
andalusia,country,,spain,europe
costa del sol,country,,spain,europe
madrid,city,madrid,spain,europe
madrid airport,city,madrid,spain,europe
barcelona,city,barcelona,spain,europe
barcelona airport,city,barcelona,spain,europe
bcn,city,barcelona,spain,europe
malaga,city,malaga,spain,europe
malaga airport,city,malaga,spain,europe
agp,city,malaga,spain,europe
alicante,city,alicante,spain,europe
alicante airport,city,alicante,spain,europe
alc,city,alicante,spain,europe
valencia,city,valencia,spain,europe
valencia airport,city,valencia,spain,europe
vlc,city,valencia,spain,europe
seville,city,seville,spain,europe
seville airport,city,seville,spain,europe
sevilla,city,seville,spain,europe
svq,city,seville,spain,europe
palma,city,palma,spain,europe
palma airport,city,palma,spain,europe
pmi,city,palma,spain,europe
palma de mallorca,city,palma,spain,europe
ibiza,city,ibiza,spain,europe
ibiza airport,city,ibiza,spain,europe
ibz,city,ibiza,spain,europe
tenerife,city,tenerife,spain,europe
tenerife airport,city,tenerife,spain,europe
tfs,city,tenerife,spain,europe
gran canaria,city,gran canaria,spain,europe
gran canaria airport,city,gran canaria,spain,europe
lpa,city,gran canaria,spain,europe
las palmas,city,gran canaria,spain,europe
bilbao,city,bilbao,spain,europe
bilbao airport,city,bilbao,spain,europe
bio,city,bilbao,spain,europe
girona,city,girona,spain,europe
girona airport,city,girona,spain,europe
lanzarote,city,lanzarote,spain,europe
lanzarote airport,city,lanzarote,spain,europe
ace,city,lanzarote,spain,europe
fuerteventura,city,fuerteventura,spain,europe
fuerteventura airport,city,fuerteventura,spain,europe
fue,city,fuerteventura,spain,europe
menorca,city,menorca,spain,europe
menorca airport,city,menorca,spain,europe
mah,city,menorca,spain,europe
granada,city,granada,spain,europe
granada airport,city,granada,spain,europe
france,country,,france,europe
corsica,country,,france,europe
provence,country,,france,europe
paris,city,paris,france,europe
paris airport,city,paris,france,europe
cdg,city,paris,france,europe
ory,city,paris,france,europe
orly,city,paris,france,europe
nice,city,nice,france,europe
nice airport,city,nice,france,europe
nce,city,nice,france,europe
lyon,city,lyon,france,europe
lyon airport,city,lyon,france,europe
lys,city,lyon,france,europe
marseille,city,marseille,france,europe
marseille airport,city,marseille,france,europe
mrs,city,marseille,france,europe
bordeaux,city,bordeaux,france,europe
bordeaux airport,city,bordeaux,france,europe
bod,city,bordeaux,france,europe
toulouse,city,toulouse,france,europe
toulouse airport,city,toulouse,france,europe
tls,city,toulouse,france,europe
nantes,city,nantes,france,europe
nantes airport,city,nantes,france,europe
nte,city,nantes,france,europe
montpellier,city,montpellier,france,europe
montpellier airport,city,montpellier,france,europe
mpl,city,montpellier,france,europe
strasbourg,city,strasbourg,france,europe
strasbourg airport,city,strasbourg,france,europe
ajaccio,city,ajaccio,france,europe
ajaccio airport,city,ajaccio,france,europe
ajaccio napoleon bonaparte,city,ajaccio,france,europe
bastia,city,bastia,france,europe
bastia airport,city,bastia,france,europe
lille,city,lille,france,europe
lille airport,city,lille,france,europe
biarritz,city,biarritz,france,europe
biarritz airport,city,biarritz,france,europe
italy,country,,italy,europe
italia,country,,italy,europe
sicily,country,,italy,europe
sardinia,country,,italy,europe
tuscany,country,,italy,europe
puglia,country,,italy,europe
rome,city,rome,italy,europe
rome airport,city,rome,italy,europe
fco,city,rome,italy,europe
fiumicino,city,rome,italy,europe
ciampino,city,rome,italy,europe
roma,city,rome,italy,europe
milan,city,milan,italy,europe
milan airport,city,milan,italy,europe
mxp,city,milan,italy,europe
malpensa,city,milan,italy,europe
linate,city,milan,italy,europe
bergamo,city,milan,italy,europe
naples,city,naples,italy,europe
naples airport,city,naples,italy,europe
nap,city,naples,italy,europe
napoli,city,naples,italy,europe
florence,city,florence,italy,europe
florence airport,city,florence,italy,europe
flr,city,florence,italy,europe
firenze,city,florence,italy,europe
venice,city,venice,italy,europe
venice airport,city,venice,italy,europe
vce,city,venice,italy,europe
venezia,city,venice,italy,europe
bologna,city,bologna,italy,europe
bologna airport,city,bologna,italy,europe
blq,city,bologna,italy,europe
pisa,city,pisa,italy,europe
pisa airport,city,pisa,italy,europe
psa,city,pisa,italy,europe
catania,city,catania,italy,europe
catania airport,city,catania,italy,europe
cta,city,catania,italy,europe
palermo,city,palermo,italy,europe
palermo airport,city,palermo,italy,europe
pmo,city,palermo,italy,europe
bari,city,bari,italy,europe
bari airport,city,bari,italy,europe
cagliari,city,cagliari,italy,europe
cagliari airport,city,cagliari,italy,europe
olbia,city,olbia,italy,europe
olbia airport,city,olbia,italy,europe
turin,city,turin,italy,europe
turin airport,city,turin,italy,europe
torino,city,turin,italy,europe
verona,city,verona,italy,europe
verona airport,city,verona,italy,europe
brindisi,city,brindisi,italy,europe
brindisi airport,city,brindisi,italy,europe
genoa,city,genoa,italy,europe
genoa airport,city,genoa,italy,europe
genova,city,genoa,italy,europe
germany,country,,germany,europe
deutschland,country,,germany,europe
berlin,city,berlin,germany,europe
berlin airport,city,berlin,germany,europe
ber,city,berlin,germany,europe
munich,city,munich,germany,europe
munich airport,city,munich,germany,europe
muc,city,munich,germany,europe
munchen,city,munich,germany,europe
frankfurt,city,frankfurt,germany,europe
frankfurt airport,city,frankfurt,germany,europe
fra,city,frankfurt,germany,europe
hamburg,city,hamburg,germany,europe
hamburg airport,city,hamburg,germany,europe
cologne,city,cologne,germany,europe
cologne airport,city,cologne,germany,europe
koln,city,cologne,germany,europe
dusseldorf,city,dusseldorf,germany,europe
dusseldorf airport,city,dusseldorf,germany,europe
dus,city,dusseldorf,germany,europe
stuttgart,city,stuttgart,germany,europe
stuttgart airport,city,stuttgart,germany,europe
hannover,city,hannover,germany,europe
hannover airport,city,hannover,germany,europe
hanover,city,hannover,germany,europe
leipzig,city,leipzig,germany,europe
leipzig airport,city,leipzig,germany,europe
dresden,city,dresden,germany,europe
dresden airport,city,dresden,germany,europe
nuremberg,city,nuremberg,germany,europe
nuremberg airport,city,nuremberg,germany,europe
nurnberg,city,nuremberg,germany,europe
united kingdom,country,,united kingdom,europe
uk,country,,united kingdom,europe
england,country,,united kingdom,europe
scotland,country,,united kingdom,europe
wales,country,,united kingdom,europe
great britain,country,,united kingdom,europe
britain,country,,united kingdom,europe
london,city,london,united kingdom,europe
london airport,city,london,united kingdom,europe
lhr,city,london,united kingdom,europe
lgw,city,london,united kingdom,europe
stn,city,london,united kingdom,europe
ltn,city,london,united kingdom,europe
heathrow,city,london,united kingdom,europe
gatwick,city,london,united kingdom,europe
stansted,city,london,united kingdom,europe
luton,city,london,united kingdom,europe
manchester,city,manchester,united kingdom,europe
manchester airport,city,manchester,united kingdom,europe
edinburgh,city,edinburgh,united kingdom,europe
edinburgh airport,city,edinburgh,united kingdom,europe
edi,city,edinburgh,united kingdom,europe
glasgow,city,glasgow,united kingdom,europe
glasgow airport,city,glasgow,united kingdom,europe
birmingham,city,birmingham,united kingdom,europe
birmingham airport,city,birmingham,united kingdom,europe
bristol,city,bristol,united kingdom,europe
bristol airport,city,bristol,united kingdom,europe
liverpool,city,liverpool,united kingdom,europe
liverpool airport,city,liverpool,united kingdom,europe
belfast,city,belfast,united kingdom,europe
belfast airport,city,belfast,united kingdom,europe
newcastle,city,newcastle,united kingdom,europe
newcastle airport,city,newcastle,united kingdom,europe
leeds,city,leeds,united kingdom,europe
leeds airport,city,leeds,united kingdom,europe
aberdeen,city,aberdeen,united kingdom,europe
aberdeen airport,city,aberdeen,united kingdom,europe
inverness,city,inverness,united kingdom,europe
inverness airport,city,inverness,united kingdom,europe
ireland,country,,ireland,europe
dublin,city,dublin,ireland,europe
dublin airport,city,dublin,ireland,europe
dub,city,dublin,ireland,europe
cork,city,cork,ireland,europe
cork airport,city,cork,ireland,europe
shannon,city,shannon,ireland,europe
shannon airport,city,shannon,ireland,europe
galway,city,galway,ireland,europe
galway airport,city,galway,ireland,europe
kerry,city,kerry,ireland,europe
kerry airport,city,kerry,ireland,europe
netherlands,country,,netherlands,europe
holland,country,,netherlands,europe
amsterdam,city,amsterdam,netherlands,europe
amsterdam airport,city,amsterdam,netherlands,europe
ams,city,amsterdam,netherlands,europe
schiphol,city,amsterdam,netherlands,europe
rotterdam,city,rotterdam,netherlands,europe
rotterdam airport,city,rotterdam,netherlands,europe
eindhoven,city,eindhoven,netherlands,europe
eindhoven airport,city,eindhoven,netherlands,europe
the hague,city,the hague,netherlands,europe
the hague airport,city,the hague,netherlands,europe
belgium,country,,belgium,europe
brussels,city,brussels,belgium,europe
brussels airport,city,brussels,belgium,europe
bru,city,brussels,belgium,europe
bruxelles,city,brussels,belgium,europe
antwerp,city,antwerp,belgium,europe
antwerp airport,city,antwerp,belgium,europe
charleroi,city,charleroi,belgium,europe
charleroi airport,city,charleroi,belgium,europe
switzerland,country,,switzerland,europe
zurich,city,zurich,switzerland,europe
zurich airport,city,zurich,switzerland,europe
zrh,city,zurich,switzerland,europe
geneva,city,geneva,switzerland,europe
geneva airport,city,geneva,switzerland,europe
gva,city,geneva,switzerland,europe
geneve,city,geneva,switzerland,europe
basel,city,basel,switzerland,europe
basel airport,city,basel,switzerland,europe
bern,city,bern,switzerland,europe
bern airport,city,bern,switzerland,europe
lugano,city,lugano,switzerland,europe
lugano airport,city,lugano,switzerland,europe
austria,country,,austria,europe
vienna,city,vienna,austria,europe
vienna airport,city,vienna,austria,europe
vie,city,vienna,austria,europe
wien,city,vienna,austria,europe
salzburg,city,salzburg,austria,europe
salzburg airport,city,salzburg,austria,europe
innsbruck,city,innsbruck,austria,europe
innsbruck airport,city,innsbruck,austria,europe
graz,city,graz,austria,europe
graz airport,city,graz,austria,europe
greece,country,,greece,europe
crete,country,,greece,europe
athens,city,athens,greece,europe
athens airport,city,athens,greece,europe
ath,city,athens,greece,europe
thessaloniki,city,thessaloniki,greece,europe
thessaloniki airport,city,thessaloniki,greece,europe
heraklion,city,heraklion,greece,europe
heraklion airport,city,heraklion,greece,europe
her,city,heraklion,greece,europe
chania,city,chania,greece,europe
chania airport,city,chania,greece,europe
rhodes,city,rhodes,greece,europe
rhodes airport,city,rhodes,greece,europe
corfu,city,corfu,greece,europe
corfu airport,city,corfu,greece,europe
kos,city,kos,greece,europe
kos airport,city,kos,greece,europe
mykonos,city,mykonos,greece,europe
mykonos airport,city,mykonos,greece,europe
santorini,city,santorini,greece,europe
santorini airport,city,santorini,greece,europe
kefalonia,city,kefalonia,greece,europe
kefalonia airport,city,kefalonia,greece,europe
zakynthos,city,zakynthos,greece,europe
zakynthos airport,city,zakynthos,greece,europe
croatia,country,,croatia,europe
zagreb,city,zagreb,croatia,europe
zagreb airport,city,zagreb,croatia,europe
split,city,split,croatia,europe
split airport,city,split,croatia,europe
dubrovnik,city,dubrovnik,croatia,europe
dubrovnik airport,city,dubrovnik,croatia,europe
zadar,city,zadar,croatia,europe
zadar airport,city,zadar,croatia,europe
pula,city,pula,croatia,europe
pula airport,city,pula,croatia,europe
poland,country,,poland,europe
warsaw,city,warsaw,poland,europe
warsaw airport,city,warsaw,poland,europe
krakow,city,krakow,poland,europe
krakow airport,city,krakow,poland,europe
gdansk,city,gdansk,poland,europe
gdansk airport,city,gdansk,poland,europe
wroclaw,city,wroclaw,poland,europe
wroclaw airport,city,wroclaw,poland,europe
czech republic,country,,czech republic,europe
czechia,country,,czech republic,europe
prague,city,prague,czech republic,europe
prague airport,city,prague,czech republic,europe
praha,city,prague,czech republic,europe
brno,city,brno,czech republic,europe
brno airport,city,brno,czech republic,europe
hungary,country,,hungary,europe
budapest,city,budapest,hungary,europe
budapest airport,city,budapest,hungary,europe
sweden,country,,sweden,europe
stockholm,city,stockholm,sweden,europe
stockholm airport,city,stockholm,sweden,europe
arlanda,city,stockholm,sweden,europe
gothenburg,city,gothenburg,sweden,europe
gothenburg airport,city,gothenburg,sweden,europe
malmo,city,malmo,sweden,europe
malmo airport,city,malmo,sweden,europe
norway,country,,norway,europe
oslo,city,oslo,norway,europe
oslo airport,city,oslo,norway,europe
bergen,city,bergen,norway,europe
bergen airport,city,bergen,norway,europe
tromso,city,tromso,norway,europe
tromso airport,city,tromso,norway,europe
denmark,country,,denmark,europe
copenhagen,city,copenhagen,denmark,europe
copenhagen airport,city,copenhagen,denmark,europe
cph,city,copenhagen,denmark,europe
billund,city,billund,denmark,europe
billund airport,city,billund,denmark,europe
aarhus,city,aarhus,denmark,europe
aarhus airport,city,aarhus,denmark,europe
finland,country,,finland,europe
helsinki,city,helsinki,finland,europe
helsinki airport,city,helsinki,finland,europe
rovaniemi,city,rovaniemi,finland,europe
rovaniemi airport,city,rovaniemi,finland,europe
iceland,country,,iceland,europe
reykjavik,city,reykjavik,iceland,europe
reykjavik airport,city,reykjavik,iceland,europe
keflavik,city,reykjavik,iceland,europe
kef,city,reykjavik,iceland,europe
malta,country,,malta,europe
valletta,city,valletta,malta,europe
valletta airport,city,valletta,malta,europe
cyprus,country,,cyprus,europe
larnaca,city,larnaca,cyprus,europe
larnaca airport,city,larnaca,cyprus,europe
paphos,city,paphos,cyprus,europe
paphos airport,city,paphos,cyprus,europe
limassol,city,limassol,cyprus,europe
limassol airport,city,limassol,cyprus,europe
nicosia,city,nicosia,cyprus,europe
nicosia airport,city,nicosia,cyprus,europe
romania,country,,romania,europe
bucharest,city,bucharest,romania,europe
bucharest airport,city,bucharest,romania,europe
cluj,city,cluj,romania,europe
cluj airport,city,cluj,romania,europe
bulgaria,country,,bulgaria,europe
sofia,city,sofia,bulgaria,europe
sofia airport,city,sofia,bulgaria,europe
varna,city,varna,bulgaria,europe
varna airport,city,varna,bulgaria,europe
burgas,city,burgas,bulgaria,europe
burgas airport,city,burgas,bulgaria,europe
serbia,country,,serbia,europe
belgrade,city,belgrade,serbia,europe
belgrade airport,city,belgrade,serbia,europe
slovenia,country,,slovenia,europe
ljubljana,city,ljubljana,slovenia,europe
ljubljana airport,city,ljubljana,slovenia,europe
montenegro,country,,montenegro,europe
podgorica,city,podgorica,montenegro,europe
podgorica airport,city,podgorica,montenegro,europe
tivat,city,tivat,montenegro,europe
tivat airport,city,tivat,montenegro,europe
albania,country,,albania,europe
tirana,city,tirana,albania,europe
tirana airport,city,tirana,albania,europe
estonia,country,,estonia,europe
tallinn,city,tallinn,estonia,europe
tallinn airport,city,tallinn,estonia,europe
latvia,country,,latvia,europe
riga,city,riga,latvia,europe
riga airport,city,riga,latvia,europe
lithuania,country,,lithuania,europe
vilnius,city,vilnius,lithuania,europe
vilnius airport,city,vilnius,lithuania,europe
luxembourg,country,,luxembourg,europe
turkey,country,,turkey,asia
turkiye,country,,turkey,asia
istanbul,city,istanbul,turkey,asia
istanbul airport,city,istanbul,turkey,asia
ist,city,istanbul,turkey,asia
sabiha gokcen,city,istanbul,turkey,asia
antalya,city,antalya,turkey,asia
antalya airport,city,antalya,turkey,asia
ayt,city,antalya,turkey,asia
izmir,city,izmir,turkey,asia
izmir airport,city,izmir,turkey,asia
dalaman,city,dalaman,turkey,asia
dalaman airport,city,dalaman,turkey,asia
bodrum,city,bodrum,turkey,asia
bodrum airport,city,bodrum,turkey,asia
ankara,city,ankara,turkey,asia
ankara airport,city,ankara,turkey,asia
united states,country,,united states,north america
usa,country,,united states,north america
united states of america,country,,united states,north america
florida,country,,united states,north america
california,country,,united states,north america
hawaii,country,,united states,north america
texas,country,,united states,north america
nevada,country,,united states,north america
arizona,country,,united states,north america
alaska,country,,united states,north america
new york,city,new york,united states,north america
new york airport,city,new york,united states,north america
jfk,city,new york,united states,north america
lga,city,new york,united states,north america
ewr,city,new york,united states,north america
nyc,city,new york,united states,north america
newark,city,new york,united states,north america
los angeles,city,los angeles,united states,north america
los angeles airport,city,los angeles,united states,north america
lax,city,los angeles,united states,north america
miami,city,miami,united states,north america
miami airport,city,miami,united states,north america
mia,city,miami,united states,north america
orlando,city,orlando,united states,north america
orlando airport,city,orlando,united states,north america
mco,city,orlando,united states,north america
las vegas,city,las vegas,united states,north america
las vegas airport,city,las vegas,united states,north america
san francisco,city,san francisco,united states,north america
san francisco airport,city,san francisco,united states,north america
sfo,city,san francisco,united states,north america
chicago,city,chicago,united states,north america
chicago airport,city,chicago,united states,north america
ord,city,chicago,united states,north america
ohare,city,chicago,united states,north america
boston,city,boston,united states,north america
boston airport,city,boston,united states,north america
seattle,city,seattle,united states,north america
seattle airport,city,seattle,united states,north america
denver,city,denver,united states,north america
denver airport,city,denver,united states,north america
dallas,city,dallas,united states,north america
dallas airport,city,dallas,united states,north america
houston,city,houston,united states,north america
houston airport,city,houston,united states,north america
atlanta,city,atlanta,united states,north america
atlanta airport,city,atlanta,united states,north america
phoenix,city,phoenix,united states,north america
phoenix airport,city,phoenix,united states,north america
san diego,city,san diego,united states,north america
san diego airport,city,san diego,united states,north america
honolulu,city,honolulu,united states,north america
honolulu airport,city,honolulu,united states,north america
tampa,city,tampa,united states,north america
tampa airport,city,tampa,united states,north america
fort lauderdale,city,fort lauderdale,united states,north america
fort lauderdale airport,city,fort lauderdale,united states,north america
salt lake city,city,salt lake city,united states,north america
salt lake city airport,city,salt lake city,united states,north america
new orleans,city,new orleans,united states,north america
new orleans airport,city,new orleans,united states,north america
nashville,city,nashville,united states,north america
nashville airport,city,nashville,united states,north america
austin,city,austin,united states,north america
austin airport,city,austin,united states,north america
washington dc,city,washington dc,united states,north america
washington dc airport,city,washington dc,united states,north america
anchorage,city,anchorage,united states,north america
anchorage airport,city,anchorage,united states,north america
maui,city,maui,united states,north america
maui airport,city,maui,united states,north america
canada,country,,canada,north america
toronto,city,toronto,canada,north america
toronto airport,city,toronto,canada,north america
yyz,city,toronto,canada,north america
pearson,city,toronto,canada,north america
vancouver,city,vancouver,canada,north america
vancouver airport,city,vancouver,canada,north america
yvr,city,vancouver,canada,north america
montreal,city,montreal,canada,north america
montreal airport,city,montreal,canada,north america
calgary,city,calgary,canada,north america
calgary airport,city,calgary,canada,north america
ottawa,city,ottawa,canada,north america
ottawa airport,city,ottawa,canada,north america
halifax,city,halifax,canada,north america
halifax airport,city,halifax,canada,north america
mexico,country,,mexico,north america
cancun,city,cancun,mexico,north america
cancun airport,city,cancun,mexico,north america
cun,city,cancun,mexico,north america
mexico city,city,mexico city,mexico,north america
mexico city airport,city,mexico city,mexico,north america
guadalajara,city,guadalajara,mexico,north america
guadalajara airport,city,guadalajara,mexico,north america
los cabos,city,los cabos,mexico,north america
los cabos airport,city,los cabos,mexico,north america
cabo san lucas,city,los cabos,mexico,north america
puerto vallarta,city,puerto vallarta,mexico,north america
puerto vallarta airport,city,puerto vallarta,mexico,north america
monterrey,city,monterrey,mexico,north america
monterrey airport,city,monterrey,mexico,north america
tulum,city,tulum,mexico,north america
tulum airport,city,tulum,mexico,north america
costa rica,country,,costa rica,north america
liberia,city,liberia,costa rica,north america
liberia airport,city,liberia,costa rica,north america
dominican republic,country,,dominican republic,north america
punta cana,city,punta cana,dominican republic,north america
punta cana airport,city,punta cana,dominican republic,north america
santo domingo,city,santo domingo,dominican republic,north america
santo domingo airport,city,santo domingo,dominican republic,north america
puerto rico,country,,puerto rico,north america
san juan,city,san juan,puerto rico,north america
san juan airport,city,san juan,puerto rico,north america
cuba,country,,cuba,north america
havana,city,havana,cuba,north america
havana airport,city,havana,cuba,north america
jamaica,country,,jamaica,north america
montego bay,city,montego bay,jamaica,north america
montego bay airport,city,montego bay,jamaica,north america
kingston,city,kingston,jamaica,north america
kingston airport,city,kingston,jamaica,north america
bahamas,country,,bahamas,north america
nassau,city,nassau,bahamas,north america
nassau airport,city,nassau,bahamas,north america
panama,country,,panama,north america
panama city,city,panama city,panama,north america
panama city airport,city,panama city,panama,north america
brazil,country,,brazil,south america
brasil,country,,brazil,south america
sao paulo,city,sao paulo,brazil,south america
sao paulo airport,city,sao paulo,brazil,south america
gru,city,sao paulo,brazil,south america
rio de janeiro,city,rio de janeiro,brazil,south america
rio de janeiro airport,city,rio de janeiro,brazil,south america
gig,city,rio de janeiro,brazil,south america
rio,city,rio de janeiro,brazil,south america
brasilia,city,brasilia,brazil,south america
brasilia airport,city,brasilia,brazil,south america
salvador,city,salvador,brazil,south america
salvador airport,city,salvador,brazil,south america
florianopolis,city,florianopolis,brazil,south america
florianopolis airport,city,florianopolis,brazil,south america
recife,city,recife,brazil,south america
recife airport,city,recife,brazil,south america
fortaleza,city,fortaleza,brazil,south america
fortaleza airport,city,fortaleza,brazil,south america
argentina,country,,argentina,south america
buenos aires,city,buenos aires,argentina,south america
buenos aires airport,city,buenos aires,argentina,south america
eze,city,buenos aires,argentina,south america
mendoza,city,mendoza,argentina,south america
mendoza airport,city,mendoza,argentina,south america
bariloche,city,bariloche,argentina,south america
bariloche airport,city,bariloche,argentina,south america
chile,country,,chile,south america
santiago,city,santiago,chile,south america
santiago airport,city,santiago,chile,south america
scl,city,santiago,chile,south america
punta arenas,city,punta arenas,chile,south america
punta arenas airport,city,punta arenas,chile,south america
peru,country,,peru,south america
lima,city,lima,peru,south america
lima airport,city,lima,peru,south america
cusco,city,cusco,peru,south america
cusco airport,city,cusco,peru,south america
cuzco,city,cusco,peru,south america
colombia,country,,colombia,south america
bogota,city,bogota,colombia,south america
bogota airport,city,bogota,colombia,south america
medellin,city,medellin,colombia,south america
medellin airport,city,medellin,colombia,south america
cartagena,city,cartagena,colombia,south america
cartagena airport,city,cartagena,colombia,south america
ecuador,country,,ecuador,south america
quito,city,quito,ecuador,south america
quito airport,city,quito,ecuador,south america
guayaquil,city,guayaquil,ecuador,south america
guayaquil airport,city,guayaquil,ecuador,south america
uruguay,country,,uruguay,south america
montevideo,city,montevideo,uruguay,south america
montevideo airport,city,montevideo,uruguay,south america
punta del este,city,punta del este,uruguay,south america
punta del este airport,city,punta del este,uruguay,south america
morocco,country,,morocco,africa
marrakech,city,marrakech,morocco,africa
marrakech airport,city,marrakech,morocco,africa
marrakesh,city,marrakech,morocco,africa
rak,city,marrakech,morocco,africa
casablanca,city,casablanca,morocco,africa
casablanca airport,city,casablanca,morocco,africa
agadir,city,agadir,morocco,africa
agadir airport,city,agadir,morocco,africa
fes,city,fes,morocco,africa
fes airport,city,fes,morocco,africa
fez,city,fes,morocco,africa
tangier,city,tangier,morocco,africa
tangier airport,city,tangier,morocco,africa
south africa,country,,south africa,africa
cape town,city,cape town,south africa,africa
cape town airport,city,cape town,south africa,africa
cpt,city,cape town,south africa,africa
johannesburg,city,johannesburg,south africa,africa
johannesburg airport,city,johannesburg,south africa,africa
jnb,city,johannesburg,south africa,africa
durban,city,durban,south africa,africa
durban airport,city,durban,south africa,africa
port elizabeth,city,port elizabeth,south africa,africa
port elizabeth airport,city,port elizabeth,south africa,africa
egypt,country,,egypt,africa
cairo,city,cairo,egypt,africa
cairo airport,city,cairo,egypt,africa
hurghada,city,hurghada,egypt,africa
hurghada airport,city,hurghada,egypt,africa
sharm el sheikh,city,sharm el sheikh,egypt,africa
sharm el sheikh airport,city,sharm el sheikh,egypt,africa
tunisia,country,,tunisia,africa
tunis,city,tunis,tunisia,africa
tunis airport,city,tunis,tunisia,africa
djerba,city,djerba,tunisia,africa
djerba airport,city,djerba,tunisia,africa
monastir,city,monastir,tunisia,africa
monastir airport,city,monastir,tunisia,africa
kenya,country,,kenya,africa
nairobi,city,nairobi,kenya,africa
nairobi airport,city,nairobi,kenya,africa
mombasa,city,mombasa,kenya,africa
mombasa airport,city,mombasa,kenya,africa
tanzania,country,,tanzania,africa
zanzibar,city,zanzibar,tanzania,africa
zanzibar airport,city,zanzibar,tanzania,africa
dar es salaam,city,dar es salaam,tanzania,africa
dar es salaam airport,city,dar es salaam,tanzania,africa
namibia,country,,namibia,africa
windhoek,city,windhoek,namibia,africa
windhoek airport,city,windhoek,namibia,africa
mauritius,country,,mauritius,africa
cape verde,country,,cape verde,africa
praia,city,praia,cape verde,africa
praia airport,city,praia,cape verde,africa
ghana,country,,ghana,africa
accra,city,accra,ghana,africa
accra airport,city,accra,ghana,africa
senegal,country,,senegal,africa
dakar,city,dakar,senegal,africa
dakar airport,city,dakar,senegal,africa
japan,country,,japan,asia
tokyo,city,tokyo,japan,asia
tokyo airport,city,tokyo,japan,asia
nrt,city,tokyo,japan,asia
hnd,city,tokyo,japan,asia
narita,city,tokyo,japan,asia
haneda,city,tokyo,japan,asia
osaka,city,osaka,japan,asia
osaka airport,city,osaka,japan,asia
kix,city,osaka,japan,asia
kyoto,city,kyoto,japan,asia
kyoto airport,city,kyoto,japan,asia
sapporo,city,sapporo,japan,asia
sapporo airport,city,sapporo,japan,asia
okinawa,city,okinawa,japan,asia
okinawa airport,city,okinawa,japan,asia
fukuoka,city,fukuoka,japan,asia
fukuoka airport,city,fukuoka,japan,asia
china,country,,china,asia
beijing,city,beijing,china,asia
beijing airport,city,beijing,china,asia
shanghai,city,shanghai,china,asia
shanghai airport,city,shanghai,china,asia
guangzhou,city,guangzhou,china,asia
guangzhou airport,city,guangzhou,china,asia
shenzhen,city,shenzhen,china,asia
shenzhen airport,city,shenzhen,china,asia
hong kong,city,hong kong,china,asia
hong kong airport,city,hong kong,china,asia
singapore,country,,singapore,asia
thailand,country,,thailand,asia
bangkok,city,bangkok,thailand,asia
bangkok airport,city,bangkok,thailand,asia
bkk,city,bangkok,thailand,asia
phuket,city,phuket,thailand,asia
phuket airport,city,phuket,thailand,asia
hkt,city,phuket,thailand,asia
chiang mai,city,chiang mai,thailand,asia
chiang mai airport,city,chiang mai,thailand,asia
krabi,city,krabi,thailand,asia
krabi airport,city,krabi,thailand,asia
koh samui,city,koh samui,thailand,asia
koh samui airport,city,koh samui,thailand,asia
india,country,,india,asia
delhi,city,delhi,india,asia
delhi airport,city,delhi,india,asia
new delhi,city,delhi,india,asia
mumbai,city,mumbai,india,asia
mumbai airport,city,mumbai,india,asia
bangalore,city,bangalore,india,asia
bangalore airport,city,bangalore,india,asia
bengaluru,city,bangalore,india,asia
goa,city,goa,india,asia
goa airport,city,goa,india,asia
chennai,city,chennai,india,asia
chennai airport,city,chennai,india,asia
indonesia,country,,indonesia,asia
bali,city,bali,indonesia,asia
bali airport,city,bali,indonesia,asia
denpasar,city,bali,indonesia,asia
jakarta,city,jakarta,indonesia,asia
jakarta airport,city,jakarta,indonesia,asia
malaysia,country,,malaysia,asia
kuala lumpur,city,kuala lumpur,malaysia,asia
kuala lumpur airport,city,kuala lumpur,malaysia,asia
penang,city,penang,malaysia,asia
penang airport,city,penang,malaysia,asia
langkawi,city,langkawi,malaysia,asia
langkawi airport,city,langkawi,malaysia,asia
vietnam,country,,vietnam,asia
hanoi,city,hanoi,vietnam,asia
hanoi airport,city,hanoi,vietnam,asia
ho chi minh city,city,ho chi minh city,vietnam,asia
ho chi minh city airport,city,ho chi minh city,vietnam,asia
saigon,city,ho chi minh city,vietnam,asia
da nang,city,da nang,vietnam,asia
da nang airport,city,da nang,vietnam,asia
philippines,country,,philippines,asia
manila,city,manila,philippines,asia
manila airport,city,manila,philippines,asia
cebu,city,cebu,philippines,asia
cebu airport,city,cebu,philippines,asia
south korea,country,,south korea,asia
korea,country,,south korea,asia
seoul,city,seoul,south korea,asia
seoul airport,city,seoul,south korea,asia
incheon,city,seoul,south korea,asia
busan,city,busan,south korea,asia
busan airport,city,busan,south korea,asia
jeju,city,jeju,south korea,asia
jeju airport,city,jeju,south korea,asia
united arab emirates,country,,united arab emirates,asia
uae,country,,united arab emirates,asia
emirates,country,,united arab emirates,asia
dubai,city,dubai,united arab emirates,asia
dubai airport,city,dubai,united arab emirates,asia
dxb,city,dubai,united arab emirates,asia
abu dhabi,city,abu dhabi,united arab emirates,asia
abu dhabi airport,city,abu dhabi,united arab emirates,asia
auh,city,abu dhabi,united arab emirates,asia
sharjah,city,sharjah,united arab emirates,asia
sharjah airport,city,sharjah,united arab emirates,asia
israel,country,,israel,asia
tel aviv,city,tel aviv,israel,asia
tel aviv airport,city,tel aviv,israel,asia
ben gurion,city,tel aviv,israel,asia
jerusalem,city,jerusalem,israel,asia
jerusalem airport,city,jerusalem,israel,asia
eilat,city,eilat,israel,asia
eilat airport,city,eilat,israel,asia
jordan,country,,jordan,asia
amman,city,amman,jordan,asia
amman airport,city,amman,jordan,asia
aqaba,city,aqaba,jordan,asia
aqaba airport,city,aqaba,jordan,asia
qatar,country,,qatar,asia
doha,city,doha,qatar,asia
doha airport,city,doha,qatar,asia
saudi arabia,country,,saudi arabia,asia
riyadh,city,riyadh,saudi arabia,asia
riyadh airport,city,riyadh,saudi arabia,asia
jeddah,city,jeddah,saudi arabia,asia
jeddah airport,city,jeddah,saudi arabia,asia
sri lanka,country,,sri lanka,asia
colombo,city,colombo,sri lanka,asia
colombo airport,city,colombo,sri lanka,asia
oman,country,,oman,asia
muscat,city,muscat,oman,asia
muscat airport,city,muscat,oman,asia
taiwan,country,,taiwan,asia
taipei,city,taipei,taiwan,asia
taipei airport,city,taipei,taiwan,asia
australia,country,,australia,oceania
tasmania,country,,australia,oceania
queensland,country,,australia,oceania
sydney,city,sydney,australia,oceania
sydney airport,city,sydney,australia,oceania
syd,city,sydney,australia,oceania
melbourne,city,melbourne,australia,oceania
melbourne airport,city,melbourne,australia,oceania
mel,city,melbourne,australia,oceania
brisbane,city,brisbane,australia,oceania
brisbane airport,city,brisbane,australia,oceania
perth,city,perth,australia,oceania
perth airport,city,perth,australia,oceania
adelaide,city,adelaide,australia,oceania
adelaide airport,city,adelaide,australia,oceania
cairns,city,cairns,australia,oceania
cairns airport,city,cairns,australia,oceania
gold coast,city,gold coast,australia,oceania
gold coast airport,city,gold coast,australia,oceania
darwin,city,darwin,australia,oceania
darwin airport,city,darwin,australia,oceania
hobart,city,hobart,australia,oceania
hobart airport,city,hobart,australia,oceania
new zealand,country,,new zealand,oceania
auckland,city,auckland,new zealand,oceania
auckland airport,city,auckland,new zealand,oceania
akl,city,auckland,new zealand,oceania
wellington,city,wellington,new zealand,oceania
wellington airport,city,wellington,new zealand,oceania
christchurch,city,christchurch,new zealand,oceania
christchurch airport,city,christchurch,new zealand,oceania
queenstown,city,queenstown,new zealand,oceania
queenstown airport,city,queenstown,new zealand,oceania
fiji,country,,fiji,oceania
nadi,city,nadi,fiji,oceania
nadi airport,city,nadi,fiji,oceania
french polynesia,country,,french polynesia,oceania
papeete,city,papeete,french polynesia,oceania
papeete airport,city,papeete,french polynesia,oceania
tahiti,city,papeete,french polynesia,oceania
)CSV";
}

} // namespace cpcc::proxies
