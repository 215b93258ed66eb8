#include "fixtures.hpp"

#include "pdf_builder.hpp"

#include <cstdio>

namespace testkit {

namespace {

std::string page_tree(PdfBuilder& pdf, int pages_obj, int count) {
  std::string kids;
  for (int i = 0; i < count; ++i) {
    int page = pdf.add("<< /Type /Page /Parent " + std::to_string(pages_obj) +
                       " 0 R /MediaBox [0 0 595 842] /Resources << >> >>");
    kids += std::to_string(page) + " 0 R ";
  }
  return "<< /Type /Pages /Kids [" + kids + "] /Count " + std::to_string(count) + " >>";
}

std::string hex_id(unsigned n) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%08X4B44E0118B25D8B18DDAEA80", 0x33A96DDDu + n);
  return buf;
}

std::string indesign_xmp() {
  std::string history;
  int day = 8, hour = 10, minute = 37;
  for (int i = 0; i < kIndesignHistoryLength; ++i) {
    char when[64];
    std::snprintf(when, sizeof when, "2010-%02d-%02dT%02d:%02d:37+01:00", 1 + day / 28,
                  1 + day % 28, hour, minute);
    history += "     <rdf:li rdf:parseType=\"Resource\">\n"
               "      <stEvt:action>" + std::string(i == 0 ? "created" : "saved") + "</stEvt:action>\n"
               "      <stEvt:instanceID>xmp.iid:" + hex_id(static_cast<unsigned>(i)) + "</stEvt:instanceID>\n"
               "      <stEvt:when>" + when + "</stEvt:when>\n"
               "      <stEvt:softwareAgent>Adobe InDesign 6.0</stEvt:softwareAgent>\n"
               "     </rdf:li>\n";
    minute += 17;
    if (minute >= 60) { minute -= 60; ++hour; }
    if (hour >= 23) { hour = 9; ++day; }
  }
  return "<?xpacket begin=\"\xEF\xBB\xBF\" id=\"W5M0MpCehiHzreSzNTczkc9d\"?>\n"
         "<x:xmpmeta xmlns:x=\"adobe:ns:meta/\" x:xmptk=\"Adobe XMP Core 4.2.1-c041\">\n"
         " <rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">\n"
         "  <rdf:Description rdf:about=\"\" xmlns:xmp=\"http://ns.adobe.com/xap/1.0/\">\n"
         "   <xmp:CreatorTool>Adobe InDesign CS4 (6.0.6)</xmp:CreatorTool>\n"
         "   <xmp:CreateDate>2011-03-06T19:04:25+01:00</xmp:CreateDate>\n"
         "   <xmp:MetadataDate>2011-03-06T19:04:38+01:00</xmp:MetadataDate>\n"
         "   <xmp:ModifyDate>2011-03-06T19:04:38+01:00</xmp:ModifyDate>\n"
         "  </rdf:Description>\n"
         "  <rdf:Description rdf:about=\"\" xmlns:dc=\"http://purl.org/dc/elements/1.1/\">\n"
         "   <dc:format>application/pdf</dc:format>\n"
         "  </rdf:Description>\n"
         "  <rdf:Description rdf:about=\"\"\n"
         "    xmlns:xmpMM=\"http://ns.adobe.com/xap/1.0/mm/\"\n"
         "    xmlns:stRef=\"http://ns.adobe.com/xap/1.0/sType/ResourceRef#\"\n"
         "    xmlns:stEvt=\"http://ns.adobe.com/xap/1.0/sType/ResourceEvent#\"\n"
         "    xmpMM:DocumentID=\"xmp.did:36A96DDD4444E011BA44C4547900889D\">\n"
         "   <xmpMM:InstanceID>xmp.iid:FD6F79CF1648E011BFA6AC29DFBD2A96</xmpMM:InstanceID>\n"
         "   <xmpMM:DerivedFrom rdf:parseType=\"Resource\">\n"
         "    <stRef:instanceID>xmp.iid:76B300A74E44E011BA44C4547900889D</stRef:instanceID>\n"
         "    <stRef:documentID>xmp.did:F87F11740720681188C6C0C59B1F3E2D</stRef:documentID>\n"
         "    <stRef:originalDocumentID>adobe:docid:indd:fac21e1b-e9a1-11db-bb63-f87ecfa109dc</stRef:originalDocumentID>\n"
         "   </xmpMM:DerivedFrom>\n"
         "   <xmpMM:History>\n"
         "    <rdf:Seq>\n" +
         history +
         "    </rdf:Seq>\n"
         "   </xmpMM:History>\n"
         "  </rdf:Description>\n"
         " </rdf:RDF>\n"
         "</x:xmpmeta>\n"
         "<?xpacket end=\"w\"?>";
}

}  // namespace

std::string octology_pdf() {
  PdfBuilder pdf("1.4");
  int catalog = pdf.reserve();
  int pages = pdf.reserve();
  pdf.set(pages, page_tree(pdf, pages, 76));
  pdf.set(catalog, "<< /Type /Catalog /Pages " + std::to_string(pages) + " 0 R /Version /1.3 >>");
  int info = pdf.add(
      "<< /Title (octology) /Author (Max Madman) /Creator (Pages)\n"
      "   /Producer (Mac OS X 10.5.2 Quartz PDFContext)\n"
      "   /CreationDate (D:20110301163522Z00'00') /ModDate (D:20110301163522Z00'00') >>");
  return pdf.build("/Root " + std::to_string(catalog) + " 0 R /Info " + std::to_string(info) +
                   " 0 R");
}

std::string indesign_pdf() {
  PdfBuilder pdf("1.4");
  int catalog = pdf.reserve();
  int pages = pdf.reserve();
  pdf.set(pages, page_tree(pdf, pages, 12));
  int metadata = pdf.add(PdfBuilder::stream("/Type /Metadata /Subtype /XML", indesign_xmp()));
  pdf.set(catalog, "<< /Type /Catalog /Pages " + std::to_string(pages) + " 0 R /Metadata " +
                       std::to_string(metadata) + " 0 R >>");
  int info = pdf.add(
      "<< /Creator (Adobe InDesign CS4 \\(6.0.6\\)) /Producer (Adobe PDF Library 9.0)\n"
      "   /CreationDate (D:20110306190425+01'00') /ModDate (D:20110306190438+01'00')\n"
      "   /Trapped /False >>");
  return pdf.build("/Root " + std::to_string(catalog) + " 0 R /Info " + std::to_string(info) +
                   " 0 R");
}

std::string minimal_pdf() {
  PdfBuilder pdf("1.7");
  int catalog = pdf.reserve();
  int pages = pdf.reserve();
  pdf.set(pages, page_tree(pdf, pages, 1));
  pdf.set(catalog, "<< /Type /Catalog /Pages " + std::to_string(pages) + " 0 R >>");
  int info = pdf.add("<< >>");
  return pdf.build("/Root " + std::to_string(catalog) + " 0 R /Info " + std::to_string(info) +
                   " 0 R");
}

std::string pubmed_html() {
  return R"(<!DOCTYPE html PUBLIC "-//W3C//DTD XHTML 1.0 Transitional//EN" "http://www.w3.org/TR/xhtml1/DTD/xhtml1-transitional.dtd">
<html xmlns="http://www.w3.org/1999/xhtml" lang="en">
<head>
<meta http-equiv="Content-Type" content="text/html; charset=UTF-8" />
<!-- meta name="author" content="commented out" -->
<title>Was the serine protease cathepsin G discovered by ... [Acta Biochim Pol. 2011] - PubMed result</title>
<meta name="keywords" content="PubMed, National Center for Biotechnology Information, NCBI, United States National Library of Medicine, NLM, MEDLINE, Medical Journals, pub med, Entrez, Journal Articles, Citation search" />
<meta name="description" content="PubMed is a service of the U.S. National Library of Medicine that includes over 19 million citations from MEDLINE and other life science journals for biomedical articles back to the 1950s. PubMed includes links to full text articles and other related resources." />
<meta name="author" content="pubmeddev" />
<META NAME='ncbi_stat' CONTENT='false' />
<meta name="ncbi_phid" content="CE8875A4D78C969100000000001DA980" />
<meta name="ncbi_pdid" content="abstract" />
<meta name="ncbi_pagesize" content="20" />
<meta name="ncbi_filter" content="all" />
<meta name="ncbi_format" content="html" />
<meta content="21383996" name="ncbi_uidlist" />
<meta name="ncbi_report" content="abstract" />
<meta name="ncbi_resultcount" content="1" />
<meta name="ncbi_app" content="entrez" />
<meta name="ncbi_hitstat" content="true" />
<meta name="ncbi_pageno" content="1" />
<meta name=ncbi_db content=pubmed>
<meta name="ncbi_sortorder" content="default" />
<meta name="ncbi_sessionid" content="CE8875A4D78C9AD1_0029SID" />
<meta name="robots" content="index,nofollow,noarchive" />
<meta name="ncbi_op" content="retrieve" />
<script type="text/javascript">var s = '<meta name="injected" content="no">';</script>
</head>
<body>
<h1>Was the serine protease cathepsin G discovered by S. G. Hedin in 1903 in bovine spleen?</h1>
<p>Palesch D, Sienczyk M, Oleksyszyn J, Reich M, Wiczerzak E, Boehm BO, Burster T.</p>
</body>
</html>
)";
}

std::vector<std::pair<std::string, std::string>> octology_expected_pairs(std::size_t file_size) {
  return {
      {"FileSize", std::to_string(file_size)},
      {"FileType", "PDF"},
      {"FileType(guessed)", "PDF document, version 1.4"},
      {"MIMEType", "application/pdf"},
      {"PDFVersion", "1.4"},
      {"Title", "octology"},
      {"Author", "Max Madman"},
      {"Creator", "Pages"},
      {"Producer", "Mac OS X 10.5.2 Quartz PDFContext"},
      {"CreateDate", "2011:03:01 16:35:22Z"},
      {"ModifyDate", "2011:03:01 16:35:22Z"},
      {"PDFVersion (1)", "1.3"},
      {"PageCount", "76"},
  };
}

}  // namespace testkit
