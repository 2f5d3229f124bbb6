// Bundled language seed texts. Profiles are character-trigram frequency
// vectors computed from these at first use. The seeds are original prose
// written for this project; they mix everyday register with web/legal
// vocabulary so that policy-like documents score well against their own
// language profile.

#include <string_view>
#include <utility>
#include <vector>

namespace polidiff {
namespace detail {

const std::vector<std::pair<std::string_view, std::string_view>>& language_seeds() {
    static const std::vector<std::pair<std::string_view, std::string_view>> kSeeds = {
        {"english", R"(The morning train was late again, and the platform slowly filled with
people reading the news on their phones. We collect information about how you use our
services, including the pages you visit and the links you choose. When you create an
account, we ask for your name and email address so that we can keep your settings and
tell you about changes that matter. The weather in the north of the country has been
unusually mild this winter, and farmers worry about the early flowering of the fruit
trees. You can ask us at any time to show you the personal data we hold about you, to
correct it, or to delete it. The committee will meet on Thursday to discuss the budget
for the coming year, and the results will be published on the official website. We may
share information with companies that provide services on our behalf, such as payment
processing and delivery, and these companies are required to protect your information.
The library has extended its opening hours, which is good news for students preparing
for their examinations. If we make important changes to this notice, we will tell you
by email or by a message on our website before the changes take effect. The recipe
calls for two cups of flour, a spoonful of honey, and a little patience while the dough
rests near the warm oven. Your choices matter to us, and you may withdraw your consent
whenever you wish without giving a reason. The river rises every spring when the snow
melts in the mountains, and the old bridge has seen a hundred such floods. We keep your
information only for as long as we need it for the purposes described here, and then we
remove or anonymize it. The orchestra played to a full house, and the final movement
brought the audience to its feet. Please read this page carefully so that you
understand what we do, why we do it, and which rights you have under the law of your
country. Children returned to school in September with new books and old friends, and
the town felt busy again after the quiet summer. To change your settings, open the
account page, choose the options tab, and select which messages you want to receive.
Orders placed before noon ship the same day, and delivery usually takes between two and
five working days depending on the region. A spokesperson for the railway company said
that repairs on the southern line would finish by the end of the month, with buses
replacing trains on weekends until then. Mix the dry ingredients first, add the milk
slowly, and stir until the batter is smooth; bake for forty minutes and let it cool on
a wire rack. The council reminds residents that garden waste is collected every second
Wednesday and that large items require a booking. Students who miss an examination for
medical reasons should contact the office within five days and attach a note from a
doctor. The forecast promises light rain in the morning followed by clear skies, with
temperatures around fifteen degrees near the coast and cooler air in the hills. We
collect information such as your email address, device identifiers, payment details,
and browsing history when you use the service. This data is processed to provide the
service, to personalize your experience, for analytics and research, and for marketing
where you have agreed. We may share personal information with analytics providers,
payment processors, and other partners who process it on our behalf. You can access,
correct, export, or delete your personal data, and you may opt out of marketing at any
time through the account settings. Cookies and similar technologies remember your
preferences and measure how visitors use the pages. We retain records only as long as
necessary for the purposes described in this notice and to comply with legal
obligations, after which the information is deleted or anonymized. If we make material
changes to this privacy notice, we will notify you by email before the changes take
effect, and the updated policy will be posted on this page with a new revision date.)"},
        {"german", R"(Der Zug hatte am Morgen wieder Verspätung, und der Bahnsteig füllte
sich langsam mit Menschen, die auf ihren Telefonen die Nachrichten lasen. Wir erheben
Informationen darüber, wie Sie unsere Dienste nutzen, einschließlich der Seiten, die
Sie besuchen, und der Links, die Sie auswählen. Wenn Sie ein Konto anlegen, fragen wir
nach Ihrem Namen und Ihrer Adresse, damit wir Ihre Einstellungen speichern und Sie über
wichtige Änderungen informieren können. Das Wetter im Norden des Landes war in diesem
Winter ungewöhnlich mild, und die Bauern sorgen sich um die frühe Blüte der Obstbäume.
Sie können jederzeit verlangen, dass wir Ihnen die gespeicherten Daten zeigen, sie
berichtigen oder löschen. Der Ausschuss trifft sich am Donnerstag, um über den Haushalt
des kommenden Jahres zu beraten, und die Ergebnisse werden auf der offiziellen Seite
veröffentlicht. Wir geben Informationen an Unternehmen weiter, die in unserem Auftrag
Leistungen erbringen, etwa Zahlungsabwicklung und Versand, und diese Unternehmen sind
verpflichtet, Ihre Daten zu schützen. Die Bibliothek hat ihre Öffnungszeiten
verlängert, was eine gute Nachricht für alle Studenten ist, die sich auf ihre
Prüfungen vorbereiten. Wenn wir wesentliche Änderungen an diesem Hinweis vornehmen,
teilen wir Ihnen das per Post oder durch eine Meldung auf unserer Seite mit, bevor die
Änderungen wirksam werden. Das Rezept verlangt zwei Tassen Mehl, einen Löffel Honig und
ein wenig Geduld, während der Teig neben dem warmen Ofen ruht. Ihre Entscheidungen sind
uns wichtig, und Sie können Ihre Einwilligung jederzeit ohne Angabe von Gründen
widerrufen. Der Fluss steigt jedes Frühjahr, wenn der Schnee in den Bergen schmilzt,
und die alte Brücke hat hundert solcher Hochwasser gesehen. Wir bewahren Ihre Daten nur
so lange auf, wie wir sie für die hier beschriebenen Zwecke benötigen, und danach
werden sie entfernt. Das Orchester spielte vor vollem Haus, und der letzte Satz riss
das Publikum von den Sitzen. Bitte lesen Sie diese Seite sorgfältig, damit Sie
verstehen, was wir tun, warum wir es tun und welche Rechte Ihnen nach dem Recht Ihres
Landes zustehen. Die Kinder kehrten im September mit neuen Büchern in die Schule
zurück, und die Stadt wirkte nach dem ruhigen Sommer wieder lebendig. Um Ihre
Einstellungen zu ändern, öffnen Sie die Kontoseite, wählen Sie den Reiter mit den
Optionen und legen Sie fest, welche Nachrichten Sie erhalten möchten. Bestellungen, die
vor zwölf Uhr eingehen, werden am selben Tag verschickt, und die Lieferung dauert je
nach Region zwei bis fünf Werktage. Ein Sprecher der Bahn sagte, dass die Arbeiten an
der Südstrecke zum Monatsende abgeschlossen sein sollen; bis dahin fahren an den
Wochenenden Busse statt Züge. Mischen Sie zuerst die trockenen Zutaten, geben Sie die
Milch langsam hinzu und rühren Sie, bis der Teig glatt ist; backen Sie ihn vierzig
Minuten und lassen Sie ihn auf einem Gitter abkühlen. Die Gemeinde erinnert daran, dass
Gartenabfälle jeden zweiten Mittwoch abgeholt werden und sperrige Stücke angemeldet
werden müssen. Wer eine Prüfung aus gesundheitlichen Gründen versäumt, meldet sich
innerhalb von fünf Tagen im Büro und legt ein ärztliches Attest vor. Der Wetterbericht
verspricht leichten Regen am Morgen und danach klaren Himmel, mit Temperaturen um
fünfzehn Grad an der Küste und kühlerer Luft in den Bergen.)"},
        {"french", R"(Le train du matin était encore en retard, et le quai se remplissait
lentement de gens qui lisaient les nouvelles sur leurs téléphones. Nous recueillons des
informations sur la manière dont vous utilisez nos services, y compris les pages que
vous visitez et les liens que vous choisissez. Lorsque vous créez un compte, nous vous
demandons votre nom et votre adresse afin de conserver vos préférences et de vous
informer des changements importants. Le temps dans le nord du pays a été
exceptionnellement doux cet hiver, et les agriculteurs s'inquiètent de la floraison
précoce des arbres fruitiers. Vous pouvez nous demander à tout moment de vous montrer
les données personnelles que nous détenons, de les corriger ou de les supprimer. Le
comité se réunira jeudi pour discuter du budget de l'année prochaine, et les résultats
seront publiés sur le site officiel. Nous pouvons partager des informations avec des
entreprises qui fournissent des services en notre nom, comme le paiement et la
livraison, et ces entreprises doivent protéger vos informations. La bibliothèque a
prolongé ses horaires d'ouverture, ce qui est une bonne nouvelle pour les étudiants qui
préparent leurs examens. Si nous apportons des changements importants à cet avis, nous
vous en informerons par courrier ou par un message sur notre site avant leur entrée en
vigueur. La recette demande deux tasses de farine, une cuillère de miel et un peu de
patience pendant que la pâte repose près du four chaud. Vos choix comptent pour nous,
et vous pouvez retirer votre consentement quand vous le souhaitez sans donner de
raison. La rivière monte chaque printemps quand la neige fond dans les montagnes, et le
vieux pont a vu cent crues semblables. Nous conservons vos informations seulement le
temps nécessaire aux fins décrites ici, puis nous les effaçons. L'orchestre a joué
devant une salle comble, et le dernier mouvement a soulevé le public. Veuillez lire
cette page attentivement afin de comprendre ce que nous faisons, pourquoi nous le
faisons et quels droits vous avez selon la loi de votre pays. Les enfants sont
retournés à l'école en septembre avec de nouveaux livres et de vieux amis, et la ville
a retrouvé son animation après un été tranquille. Pour modifier vos préférences,
ouvrez la page du compte, choisissez l'onglet des options et indiquez quels messages
vous souhaitez recevoir. Les commandes passées avant midi partent le jour même, et la
livraison prend de deux à cinq jours ouvrés selon la région. Un porte-parole de la
compagnie ferroviaire a annoncé que les travaux sur la ligne sud seraient terminés à la
fin du mois; des autobus remplaceront les trains le week-end jusque-là. Mélangez
d'abord les ingrédients secs, ajoutez le lait lentement et remuez jusqu'à ce que la
pâte soit lisse; faites cuire quarante minutes et laissez refroidir sur une grille. La
mairie rappelle aux habitants que les déchets de jardin sont ramassés un mercredi sur
deux et que les objets volumineux demandent une réservation. Les étudiants absents à un
examen pour raison médicale doivent écrire au bureau dans les cinq jours et joindre un
certificat. La météo annonce une pluie légère le matin puis un ciel dégagé, avec
quinze degrés près de la côte et un air plus frais dans les collines.)"},
        {"spanish", R"(El tren de la mañana llegó tarde otra vez, y el andén se llenaba
despacio de gente que leía las noticias en sus teléfonos. Recogemos información sobre
cómo utiliza nuestros servicios, incluidas las páginas que visita y los enlaces que
elige. Cuando crea una cuenta, le pedimos su nombre y su dirección para guardar sus
preferencias y avisarle de los cambios importantes. El tiempo en el norte del país ha
sido inusualmente suave este invierno, y los agricultores se preocupan por la floración
temprana de los árboles frutales. Puede pedirnos en cualquier momento que le mostremos
los datos personales que guardamos, que los corrijamos o que los borremos. El comité se
reunirá el jueves para hablar del presupuesto del próximo año, y los resultados se
publicarán en la página oficial. Podemos compartir información con empresas que prestan
servicios en nuestro nombre, como el cobro y la entrega, y esas empresas están
obligadas a proteger sus datos. La biblioteca ha ampliado su horario, lo que es una
buena noticia para los estudiantes que preparan sus exámenes. Si hacemos cambios
importantes en este aviso, se lo comunicaremos por correo o mediante un mensaje en
nuestra página antes de que entren en vigor. La receta pide dos tazas de harina, una
cucharada de miel y un poco de paciencia mientras la masa reposa junto al horno
caliente. Sus decisiones nos importan, y puede retirar su consentimiento cuando quiera
sin dar ninguna razón. El río crece cada primavera cuando la nieve se derrite en las
montañas, y el puente viejo ha visto cien crecidas como esa. Guardamos su información
solo el tiempo necesario para los fines descritos aquí, y después la eliminamos. La
orquesta tocó con la sala llena, y el último movimiento levantó al público de sus
asientos. Lea esta página con atención para entender qué hacemos, por qué lo hacemos y
qué derechos tiene según la ley de su país. Los niños volvieron a la escuela en
septiembre con libros nuevos y amigos viejos, y la ciudad recuperó su ritmo después de
un verano tranquilo. Para cambiar sus preferencias, abra la página de la cuenta, elija
la pestaña de opciones e indique qué mensajes desea recibir. Los pedidos hechos antes
del mediodía salen el mismo día, y la entrega tarda de dos a cinco días laborables
según la región. Un portavoz de la compañía ferroviaria dijo que las obras de la línea
sur terminarán a fin de mes; hasta entonces habrá autobuses en lugar de trenes los
fines de semana. Mezcle primero los ingredientes secos, añada la leche poco a poco y
remueva hasta que la masa quede lisa; hornee cuarenta minutos y deje enfriar sobre una
rejilla. El ayuntamiento recuerda que los restos de jardín se recogen un miércoles de
cada dos y que los objetos grandes necesitan cita previa. Los estudiantes que falten a
un examen por motivos médicos deben avisar a la oficina en cinco días y adjuntar un
justificante. El pronóstico anuncia lluvia ligera por la mañana y cielos despejados
después, con quince grados cerca de la costa y aire más fresco en las montañas.)"},
        {"italian", R"(Il treno del mattino era di nuovo in ritardo, e il binario si
riempiva lentamente di persone che leggevano le notizie sui loro telefoni. Raccogliamo
informazioni su come usi i nostri servizi, comprese le pagine che visiti e i
collegamenti che scegli. Quando crei un account, ti chiediamo il nome e l'indirizzo per
conservare le tue preferenze e avvisarti dei cambiamenti importanti. Il tempo nel nord
del paese è stato insolitamente mite questo inverno, e i contadini si preoccupano della
fioritura precoce degli alberi da frutto. Puoi chiederci in qualsiasi momento di
mostrarti i dati personali che conserviamo, di correggerli o di cancellarli. Il
comitato si riunirà giovedì per discutere il bilancio del prossimo anno, e i risultati
saranno pubblicati sul sito ufficiale. Possiamo condividere informazioni con aziende
che forniscono servizi per nostro conto, come il pagamento e la consegna, e queste
aziende devono proteggere le tue informazioni. La biblioteca ha esteso l'orario di
apertura, una buona notizia per gli studenti che preparano gli esami. Se facciamo
cambiamenti importanti a questo avviso, te lo comunicheremo per posta o con un messaggio
sul nostro sito prima che entrino in vigore. La ricetta richiede due tazze di farina,
un cucchiaio di miele e un poco di pazienza mentre l'impasto riposa vicino al forno
caldo. Le tue scelte contano per noi, e puoi ritirare il consenso quando vuoi senza
dare una ragione. Il fiume cresce ogni primavera quando la neve si scioglie in
montagna, e il vecchio ponte ha visto cento piene come questa. Conserviamo le tue
informazioni solo per il tempo necessario agli scopi descritti qui, e poi le
eliminiamo. L'orchestra ha suonato davanti a una sala piena, e l'ultimo movimento ha
fatto alzare il pubblico in piedi. Leggi questa pagina con attenzione per capire cosa
facciamo, perché lo facciamo e quali diritti hai secondo la legge del tuo paese. I
bambini sono tornati a scuola a settembre con libri nuovi e vecchi amici, e la città ha
ripreso il suo ritmo dopo un'estate tranquilla. Per cambiare le preferenze, apri la
pagina del conto, scegli la scheda delle opzioni e indica quali messaggi vuoi ricevere.
Gli ordini fatti prima di mezzogiorno partono lo stesso giorno, e la consegna richiede
da due a cinque giorni lavorativi secondo la regione. Un portavoce della ferrovia ha
detto che i lavori sulla linea sud finiranno entro la fine del mese; fino ad allora nei
fine settimana circoleranno autobus al posto dei treni. Mescola prima gli ingredienti
secchi, aggiungi il latte lentamente e gira finché l'impasto non è liscio; cuoci per
quaranta minuti e lascia raffreddare su una griglia. Il comune ricorda che i rifiuti
del giardino vengono raccolti un mercoledì su due e che i pezzi grandi richiedono una
prenotazione. Gli studenti assenti a un esame per motivi di salute devono scrivere
all'ufficio entro cinque giorni e allegare un certificato. Le previsioni annunciano
pioggia leggera al mattino e poi cielo sereno, con quindici gradi vicino alla costa e
aria più fresca in collina.)"},
        {"portuguese", R"(O trem da manhã chegou atrasado outra vez, e a plataforma se
enchia devagar de pessoas que liam as notícias nos seus telefones. Recolhemos
informações sobre como você usa os nossos serviços, incluindo as páginas que visita e
os links que escolhe. Quando você cria uma conta, pedimos o seu nome e o seu endereço
para guardar as suas preferências e avisar sobre mudanças importantes. O tempo no norte
do país tem sido extraordinariamente ameno neste inverno, e os agricultores se
preocupam com a floração precoce das árvores de fruto. Você pode pedir a qualquer
momento que mostremos os dados pessoais que guardamos, que os corrijamos ou que os
apaguemos. O comitê vai se reunir na quinta-feira para discutir o orçamento do próximo
ano, e os resultados serão publicados na página oficial. Podemos compartilhar
informações com empresas que prestam serviços em nosso nome, como cobrança e entrega, e
essas empresas são obrigadas a proteger os seus dados. A biblioteca ampliou o horário
de funcionamento, uma boa notícia para os estudantes que preparam os seus exames. Se
fizermos mudanças importantes neste aviso, comunicaremos por correio ou por uma
mensagem na nossa página antes de entrarem em vigor. A receita pede duas xícaras de
farinha, uma colher de mel e um pouco de paciência enquanto a massa descansa perto do
forno quente. As suas escolhas importam para nós, e você pode retirar o seu
consentimento quando quiser sem dar nenhuma razão. O rio sobe toda primavera quando a
neve derrete nas montanhas, e a ponte velha já viu cem cheias como essa. Guardamos as
suas informações apenas pelo tempo necessário para os fins descritos aqui, e depois as
eliminamos. A orquestra tocou com a sala cheia, e o último movimento levantou o público
das cadeiras. Leia esta página com atenção para entender o que fazemos, por que fazemos
e quais direitos você tem segundo a lei do seu país. As crianças voltaram à escola em
setembro com livros novos e amigos velhos, e a cidade recuperou o seu ritmo depois de
um verão tranquilo. Para mudar as suas preferências, abra a página da conta, escolha a
aba de opções e indique quais mensagens deseja receber. Os pedidos feitos antes do
meio-dia saem no mesmo dia, e a entrega leva de dois a cinco dias úteis conforme a
região. Um porta-voz da ferrovia disse que as obras da linha sul terminam no fim do
mês; até lá haverá ônibus no lugar dos trens nos fins de semana. Misture primeiro os
ingredientes secos, acrescente o leite aos poucos e mexa até a massa ficar lisa; asse
por quarenta minutos e deixe esfriar sobre uma grade. A prefeitura lembra que os restos
de jardim são recolhidos a cada duas quartas-feiras e que objetos grandes precisam de
agendamento. Os estudantes que perderem uma prova por motivo de saúde devem avisar o
escritório em cinco dias e juntar um atestado. A previsão anuncia chuva fraca pela
manhã e céu limpo depois, com quinze graus perto da costa e ar mais fresco nas serras.)"},
        {"dutch", R"(De ochtendtrein was weer te laat, en het perron vulde zich langzaam
met mensen die het nieuws op hun telefoons lazen. Wij verzamelen informatie over hoe u
onze diensten gebruikt, waaronder de pagina's die u bezoekt en de koppelingen die u
kiest. Wanneer u een account aanmaakt, vragen wij uw naam en uw adres zodat wij uw
voorkeuren kunnen bewaren en u over belangrijke wijzigingen kunnen informeren. Het weer
in het noorden van het land was deze winter ongewoon zacht, en de boeren maken zich
zorgen over de vroege bloei van de fruitbomen. U kunt ons op elk moment vragen om de
gegevens te tonen die wij bewaren, om ze te verbeteren of om ze te verwijderen. De
commissie komt donderdag bijeen om de begroting van het komende jaar te bespreken, en
de uitslagen worden op de officiële pagina gepubliceerd. Wij kunnen informatie delen
met bedrijven die namens ons diensten leveren, zoals betaling en bezorging, en die
bedrijven zijn verplicht uw gegevens te beschermen. De bibliotheek heeft haar
openingstijden verlengd, goed nieuws voor studenten die zich op hun examens
voorbereiden. Als wij belangrijke wijzigingen in deze verklaring aanbrengen, laten wij
u dat per post of via een bericht op onze pagina weten voordat de wijzigingen ingaan.
Het recept vraagt twee koppen meel, een lepel honing en een beetje geduld terwijl het
deeg naast de warme oven rust. Uw keuzes zijn voor ons belangrijk, en u kunt uw
toestemming op elk moment intrekken zonder een reden te geven. De rivier stijgt elk
voorjaar wanneer de sneeuw in de bergen smelt, en de oude brug heeft honderd van zulke
overstromingen gezien. Wij bewaren uw informatie slechts zolang dat nodig is voor de
doelen die hier beschreven staan, en daarna verwijderen wij haar. Het orkest speelde
voor een volle zaal, en het laatste deel bracht het publiek op de been. Lees deze
pagina zorgvuldig zodat u begrijpt wat wij doen, waarom wij het doen en welke rechten u
heeft volgens het recht van uw land. De kinderen gingen in september terug naar school
met nieuwe boeken en oude vrienden, en de stad voelde weer druk na de stille zomer. Om
uw voorkeuren te wijzigen opent u de accountpagina, kiest u het tabblad met opties en
geeft u aan welke berichten u wilt ontvangen. Bestellingen die voor twaalf uur
binnenkomen gaan dezelfde dag de deur uit, en de bezorging duurt twee tot vijf
werkdagen, afhankelijk van de regio. Een woordvoerder van de spoorwegen zei dat het
werk aan de zuidelijke lijn eind deze maand klaar is; tot die tijd rijden er in het
weekend bussen in plaats van treinen. Meng eerst de droge ingrediënten, voeg de melk
langzaam toe en roer tot het beslag glad is; bak veertig minuten en laat afkoelen op
een rooster. De gemeente herinnert bewoners eraan dat tuinafval om de week op woensdag
wordt opgehaald en dat grote stukken moeten worden aangemeld. Studenten die een examen
missen om medische redenen melden dat binnen vijf dagen bij het kantoor en voegen een
verklaring toe. Het weerbericht belooft lichte regen in de ochtend en daarna een heldere
lucht, met vijftien graden aan de kust en koelere lucht in de heuvels.)"},
    };
    return kSeeds;
}

}  // namespace detail
}  // namespace polidiff
